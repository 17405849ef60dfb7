#include "cauchyscope/boundary_spectrum.hpp"

#include <cmath>

namespace cauchyscope {

Complex unit_root(int grid_size, long long index) {
  long long j = index % grid_size;
  if (j < 0) j += grid_size;
  return std::polar(1.0, kTwoPi * static_cast<double>(j) /
                             static_cast<double>(grid_size));
}

BoundarySamples sample(const BoundaryFunction& generator, int grid_size) {
  if (grid_size < 4) {
    throw PreconditionError("sample: grid_size must be at least 4");
  }
  BoundarySamples out;
  out.grid_size = grid_size;
  out.values.resize(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    const Complex v = generator(unit_root(grid_size, j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw PreconditionError("sample: generator returned a non-finite value at grid index " +
                              std::to_string(j));
    }
    out.values[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

void validate(const BoundarySamples& samples) {
  if (samples.grid_size < 4) {
    throw PreconditionError("BoundarySamples: grid_size must be at least 4");
  }
  if (static_cast<int>(samples.values.size()) != samples.grid_size) {
    throw PreconditionError("BoundarySamples: values.size() != grid_size");
  }
  for (std::size_t j = 0; j < samples.values.size(); ++j) {
    const Complex& v = samples.values[j];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw PreconditionError("BoundarySamples: non-finite value at index " +
                              std::to_string(j));
    }
  }
}

FourierSpectrum::FourierSpectrum(int half_window, int source_grid_size)
    : half_window_(half_window),
      source_grid_size_(source_grid_size),
      coeffs_(2 * static_cast<std::size_t>(half_window) + 1, Complex(0.0)) {
  if (half_window < 0) {
    throw PreconditionError("FourierSpectrum: negative half_window");
  }
}

Complex FourierSpectrum::at(int n) const {
  if (n < -half_window_ || n > half_window_) {
    throw PreconditionError("FourierSpectrum: index " + std::to_string(n) +
                            " outside window [-" + std::to_string(half_window_) +
                            ", " + std::to_string(half_window_) + "]");
  }
  return coeffs_[static_cast<std::size_t>(n + half_window_)];
}

void FourierSpectrum::set(int n, Complex value) {
  if (n < -half_window_ || n > half_window_) {
    throw PreconditionError("FourierSpectrum: set outside window");
  }
  coeffs_[static_cast<std::size_t>(n + half_window_)] = value;
}

double FourierSpectrum::norm2() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double FourierSpectrum::coanalytic_norm2() const {
  double s = 0.0;
  for (int n = -half_window_; n <= -1; ++n) s += std::norm(at(n));
  return std::sqrt(s);
}

double FourierSpectrum::max_modulus() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

// twiddle table: w[j] = e^{-2 pi i j / M}
std::vector<Complex> twiddle_table(int grid_size) {
  std::vector<Complex> w(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    w[static_cast<std::size_t>(j)] =
        std::polar(1.0, -kTwoPi * static_cast<double>(j) /
                            static_cast<double>(grid_size));
  }
  return w;
}

}  // namespace

FourierSpectrum fourier_coefficients(const BoundarySamples& samples,
                                     int half_window) {
  validate(samples);
  const int m = samples.grid_size;
  if (half_window < 0 || 2 * half_window + 1 > m) {
    throw PreconditionError(
        "fourier_coefficients: window 2K+1 exceeds grid size (K must satisfy "
        "K <= (M-1)/2)");
  }
  const std::vector<Complex> w = twiddle_table(m);
  FourierSpectrum out(half_window, m);
  std::vector<Complex> terms(static_cast<std::size_t>(m));
  for (int n = -half_window; n <= half_window; ++n) {
    for (int j = 0; j < m; ++j) {
      const long long idx =
          (static_cast<long long>(j) * n) % m;  // may be negative
      const std::size_t k = static_cast<std::size_t>(idx < 0 ? idx + m : idx);
      terms[static_cast<std::size_t>(j)] =
          samples.values[static_cast<std::size_t>(j)] * w[k];
    }
    out.set(n, pairwise_sum(std::span<const Complex>(terms)) /
                   static_cast<double>(m));
  }
  return out;
}

std::vector<Complex> full_dft(const BoundarySamples& samples) {
  validate(samples);
  const int m = samples.grid_size;
  const std::vector<Complex> w = twiddle_table(m);
  std::vector<Complex> out(static_cast<std::size_t>(m));
  std::vector<Complex> terms(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) {
    for (int j = 0; j < m; ++j) {
      const std::size_t k =
          static_cast<std::size_t>((static_cast<long long>(j) * n) % m);
      terms[static_cast<std::size_t>(j)] =
          samples.values[static_cast<std::size_t>(j)] * w[k];
    }
    out[static_cast<std::size_t>(n)] =
        pairwise_sum(std::span<const Complex>(terms)) / static_cast<double>(m);
  }
  return out;
}

AnalyticSplit analytic_split(const FourierSpectrum& spectrum) {
  const int k = spectrum.half_window();
  AnalyticSplit out;
  out.analytic.resize(static_cast<std::size_t>(k) + 1);
  out.coanalytic.assign(static_cast<std::size_t>(k) + 1, Complex(0.0));
  for (int n = 0; n <= k; ++n) {
    out.analytic[static_cast<std::size_t>(n)] = spectrum.at(n);
  }
  for (int n = 1; n <= k; ++n) {
    out.coanalytic[static_cast<std::size_t>(n)] = std::conj(spectrum.at(-n));
  }
  return out;
}

namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

void check_interior(Complex z, double margin) {
  if (std::abs(z) > 1.0 - margin) {
    throw EvaluationDomainError(
        "series evaluation requires |z| <= 1 - interior margin; use the "
        "Cauchy evaluator near the boundary");
  }
}

}  // namespace

Complex AnalyticSplit::analytic_at(Complex z, double interior_margin) const {
  check_interior(z, interior_margin);
  return horner(analytic, z);
}

Complex AnalyticSplit::coanalytic_at(Complex z, double interior_margin) const {
  check_interior(z, interior_margin);
  return horner(coanalytic, z);
}

FourierSpectrum cesaro_coefficients(const FourierSpectrum& spectrum, int m) {
  if (m < 0 || m > spectrum.half_window()) {
    throw PreconditionError(
        "cesaro_coefficients: order m exceeds the spectrum window");
  }
  FourierSpectrum out(m, spectrum.source_grid_size());
  for (int n = -m; n <= m; ++n) {
    const double weight =
        1.0 - static_cast<double>(std::abs(n)) / static_cast<double>(m + 1);
    const Complex c = spectrum.at(n);
    // exact zeros stay exact zeros: the vanishing pattern is preserved
    out.set(n, c == Complex(0.0) ? Complex(0.0) : weight * c);
  }
  return out;
}

BoundarySamples cesaro_mean(const FourierSpectrum& spectrum, int m) {
  const FourierSpectrum c = cesaro_coefficients(spectrum, m);
  const int grid = spectrum.source_grid_size();
  BoundarySamples out;
  out.grid_size = grid;
  out.values.resize(static_cast<std::size_t>(grid));
  std::vector<Complex> terms(2 * static_cast<std::size_t>(m) + 1);
  for (int j = 0; j < grid; ++j) {
    for (int n = -m; n <= m; ++n) {
      terms[static_cast<std::size_t>(n + m)] =
          c.at(n) * unit_root(grid, static_cast<long long>(n) * j);
    }
    out.values[static_cast<std::size_t>(j)] =
        pairwise_sum(std::span<const Complex>(terms));
  }
  return out;
}

}  // namespace cauchyscope
