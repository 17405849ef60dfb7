#pragma once

#include <Eigen/Core>
#include <vector>

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/complex_polynomial.hpp"
#include "cauchyscope/common.hpp"

namespace cauchyscope {

/// The finite moment system built from negative Fourier coefficients:
/// rows(r, c) = fhat(-1 - r - c), r = 0..row_count-1, c = 0..order.
/// Row r is the length-(order+1) truncation of the shifted coefficient row
/// starting at index -(r+1); the matrix is Hankel (entries depend on r + c
/// only).
struct HankelSystem {
  int order = 0;      // N: columns are 0..N
  int row_count = 0;  // R
  Eigen::MatrixXcd rows;
};

/// Builds the system. Requires row_count >= max(order, 1) and the deepest
/// referenced index order + row_count within the spectrum window; otherwise
/// PreconditionError ("window exhausted").
HankelSystem build_system(const FourierSpectrum& spectrum, int order,
                          int row_count);

struct Annihilator {
  ComplexPolynomial poly;  // normalized: max-|coeff| one, real-positive phase
  double residual = 0.0;   // ||rows * D||_2 at the returned D
  /// Two smallest singular values within rank_tol of each other (relative to
  /// the largest): the null direction is not unique and the smallest-index
  /// deterministic representative was taken.
  bool degenerate = false;
  /// The system matrix is exactly zero; every vector annihilates and the
  /// convention D = (1, 0, ..., 0) is returned.
  bool all_annihilating = false;
};

/// Unit-normalized coefficient vector minimizing ||rows * D||_2 (the right
/// singular vector of the smallest singular value). Never infeasible.
Annihilator annihilator(const HankelSystem& system, double rank_tol);

struct RankReport {
  int rank = 0;
  /// sigma_rank / sigma_{rank+1} (1-based), the cliff sharpness; +infinity
  /// when the truncation shows no noise floor (rank == size) or the matrix
  /// is numerically zero (rank == 0).
  double gap = 0.0;
  std::vector<double> singular_values;  // descending
};

/// Number of singular values of the square (max_order+1) x (max_order+1)
/// Hankel truncation above rank_tol * sigma_max. For rational coanalytic
/// parts with all poles inside the disc this equals the pole count with
/// multiplicity.
RankReport numeric_rank(const FourierSpectrum& spectrum, int max_order,
                        double rank_tol);

/// Coefficients of P*f by discrete convolution: (Pf)^(j) = sum_k P_k
/// fhat(j - k). The window shrinks by deg(P) on both sides.
FourierSpectrum convolve_spectrum(const ComplexPolynomial& p,
                                  const FourierSpectrum& spectrum);

/// max over n = n_from..n_to of |sum_k P_k fhat(-n - k)| / scale -- the
/// normalized moment-condition residual shared by the detector and the
/// falsifier so their verdicts use one yardstick.
double moment_residual(const ComplexPolynomial& p,
                       const FourierSpectrum& spectrum, int n_from, int n_to,
                       double scale);

}  // namespace cauchyscope
