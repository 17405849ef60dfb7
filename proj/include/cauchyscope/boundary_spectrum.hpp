#pragma once

#include <functional>
#include <vector>

#include "cauchyscope/common.hpp"

namespace cauchyscope {

/// Values of a boundary function on the uniform grid z_j = e^{2 pi i j / M},
/// j = 0..M-1.
struct BoundarySamples {
  int grid_size = 0;
  std::vector<Complex> values;
};

/// e^{2 pi i j / M}. `index` may be any integer; it is reduced mod M.
Complex unit_root(int grid_size, long long index);

using BoundaryFunction = std::function<Complex(Complex)>;

/// Evaluates `generator` on the M-point grid. Throws PreconditionError for
/// M < 4 or a non-finite generator value.
BoundarySamples sample(const BoundaryFunction& generator, int grid_size);

/// Checks the BoundarySamples invariants (size, finiteness).
void validate(const BoundarySamples& samples);

/// Fourier coefficients fhat(n) on the symmetric window |n| <= K, together
/// with the grid size they were computed from.
class FourierSpectrum {
 public:
  FourierSpectrum(int half_window, int source_grid_size);

  int half_window() const { return half_window_; }
  int source_grid_size() const { return source_grid_size_; }

  /// fhat(n). Throws PreconditionError when |n| exceeds the window; the
  /// callers that need "window exhausted" semantics rely on this.
  Complex at(int n) const;
  void set(int n, Complex value);

  /// sqrt(sum over the window of |fhat(n)|^2) -- the working scale for
  /// relative residuals.
  double norm2() const;
  /// Same sum restricted to n <= -1.
  double coanalytic_norm2() const;
  double max_modulus() const;

 private:
  int half_window_;
  int source_grid_size_;
  std::vector<Complex> coeffs_;  // index n + half_window_
};

/// Discrete Fourier coefficients (1/M) sum_j values[j] e^{-2 pi i j n / M}
/// for |n| <= half_window. Requires half_window <= (M-1)/2 so the window is
/// alias-free. Exact (to roundoff) for trigonometric polynomials of degree
/// <= half_window when M > 2*half_window.
FourierSpectrum fourier_coefficients(const BoundarySamples& samples,
                                     int half_window);

/// Full M-point DFT, scaled by 1/M; entry n holds the coefficient of the
/// alias class n (n = 0..M-1). Used by the Plancherel and inversion checks.
std::vector<Complex> full_dft(const BoundarySamples& samples);

/// The split f = F + conj(G): F carries fhat(n) for n >= 0, G carries
/// conj(fhat(-k)) at power k >= 1 (G(0) = 0).
struct AnalyticSplit {
  std::vector<Complex> analytic;    // F coefficients, index n = 0..K
  std::vector<Complex> coanalytic;  // G coefficients, index k = 0..K

  /// F(z) by Horner. Requires |z| <= 1 - interior_margin.
  Complex analytic_at(Complex z, double interior_margin = 1e-3) const;
  /// G(z) by Horner, same domain restriction.
  Complex coanalytic_at(Complex z, double interior_margin = 1e-3) const;
};

AnalyticSplit analytic_split(const FourierSpectrum& spectrum);

/// Coefficients of the m-th Cesaro mean: fhat(n) * (1 - |n|/(m+1)) for
/// |n| <= m. Indices with fhat(n) == 0 stay exactly zero. Requires
/// m <= half_window.
FourierSpectrum cesaro_coefficients(const FourierSpectrum& spectrum, int m);

/// Values of the m-th Cesaro mean on the source grid.
BoundarySamples cesaro_mean(const FourierSpectrum& spectrum, int m);

}  // namespace cauchyscope
