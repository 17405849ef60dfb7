#include "cauchyscope/winding.hpp"

#include <cmath>
#include <limits>

namespace cauchyscope {

double default_min_mod_tol(const BoundarySamples& samples) {
  double m = 0.0;
  for (const Complex& v : samples.values) m = std::max(m, std::abs(v));
  return 1e-8 * m;
}

WindingResult winding_number(const BoundarySamples& samples,
                             double min_mod_tol) {
  validate(samples);
  const int m = samples.grid_size;

  double min_modulus = std::numeric_limits<double>::infinity();
  int min_index = 0;
  for (int j = 0; j < m; ++j) {
    const double mod = std::abs(samples.values[static_cast<std::size_t>(j)]);
    if (mod < min_modulus) {
      min_modulus = mod;
      min_index = j;
    }
  }
  if (min_modulus < min_mod_tol) {
    throw PreconditionError(
        "winding undefined: sample modulus " + std::to_string(min_modulus) +
        " below tolerance at grid index " + std::to_string(min_index));
  }

  double total = 0.0;
  double max_step = 0.0;
  for (int j = 0; j < m; ++j) {
    const Complex cur = samples.values[static_cast<std::size_t>(j)];
    const Complex next = samples.values[static_cast<std::size_t>((j + 1) % m)];
    const double step = std::arg(next * std::conj(cur));
    max_step = std::max(max_step, std::abs(step));
    if (std::abs(step) >= kPi / 2.0) {
      throw ResolutionError(
          "winding unresolved: phase step " + std::to_string(step) +
          " at grid index " + std::to_string(j) +
          " reaches pi/2; resample at a finer grid");
    }
    total += step;
  }

  const double turns = total / kTwoPi;
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > 0.1) {
    throw ResolutionError(
        "winding unresolved: accumulated argument " + std::to_string(turns) +
        " turns is not within 0.1 of an integer");
  }
  WindingResult out;
  out.winding = static_cast<int>(nearest);
  out.min_modulus = min_modulus;
  out.max_phase_step = max_step;
  return out;
}

WindingResult winding_number(const BoundaryFunction& generator, int grid_size,
                             double min_mod_rel, int refine_budget) {
  int m = grid_size;
  for (int attempt = 0;; ++attempt) {
    const BoundarySamples s = sample(generator, m);
    double max_mod = 0.0;
    for (const Complex& v : s.values) max_mod = std::max(max_mod, std::abs(v));
    try {
      return winding_number(s, min_mod_rel * max_mod);
    } catch (const ResolutionError&) {
      if (attempt >= refine_budget) throw;
      m *= 2;
    }
  }
}

BoundarySamples composite_samples(const BoundarySamples& f,
                                  const ComplexPolynomial& p,
                                  const ComplexPolynomial& q) {
  validate(f);
  BoundarySamples out;
  out.grid_size = f.grid_size;
  out.values.resize(f.values.size());
  for (int j = 0; j < f.grid_size; ++j) {
    const Complex z = unit_root(f.grid_size, j);
    out.values[static_cast<std::size_t>(j)] =
        p(z) * f.values[static_cast<std::size_t>(j)] + q(z);
  }
  return out;
}

WindingResult composite_winding(const BoundarySamples& f,
                                const ComplexPolynomial& p,
                                const ComplexPolynomial& q,
                                double min_mod_tol) {
  if (p.is_zero() && q.is_zero()) {
    throw PreconditionError(
        "composite_winding: P and Q are both identically zero");
  }
  return winding_number(composite_samples(f, p, q), min_mod_tol);
}

}  // namespace cauchyscope
