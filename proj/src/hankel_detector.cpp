#include "cauchyscope/hankel_detector.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace cauchyscope {

HankelSystem build_system(const FourierSpectrum& spectrum, int order,
                          int row_count) {
  if (order < 0) throw PreconditionError("build_system: negative order");
  if (row_count < std::max(order, 1)) {
    throw PreconditionError(
        "build_system: need at least max(order, 1) rows, got " +
        std::to_string(row_count));
  }
  const int deepest = order + row_count;  // index of fhat(-(order+row_count))
  if (deepest > spectrum.half_window()) {
    throw PreconditionError(
        "build_system: window exhausted, deepest coefficient index " +
        std::to_string(deepest) + " exceeds half window " +
        std::to_string(spectrum.half_window()));
  }
  HankelSystem out;
  out.order = order;
  out.row_count = row_count;
  out.rows.resize(row_count, order + 1);
  for (int r = 0; r < row_count; ++r) {
    for (int c = 0; c <= order; ++c) {
      out.rows(r, c) = spectrum.at(-1 - r - c);
    }
  }
  return out;
}

Annihilator annihilator(const HankelSystem& system, double rank_tol) {
  const int cols = system.order + 1;
  Annihilator out;

  if (system.rows.norm() == 0.0) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(cols), Complex(0.0));
    coeffs[0] = Complex(1.0);
    out.poly = ComplexPolynomial(std::move(coeffs));
    out.residual = 0.0;
    out.all_annihilating = true;
    out.degenerate = cols > 1;
    return out;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system.rows, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();

  // effective singular values padded with exact zeros when rows < cols
  std::vector<double> sigma(static_cast<std::size_t>(cols), 0.0);
  for (int i = 0; i < sv.size() && i < cols; ++i) {
    sigma[static_cast<std::size_t>(i)] = sv(i);
  }

  const Eigen::VectorXcd d = svd.matrixV().col(cols - 1);
  std::vector<Complex> coeffs(static_cast<std::size_t>(cols));
  for (int i = 0; i < cols; ++i) coeffs[static_cast<std::size_t>(i)] = d(i);
  out.poly = ComplexPolynomial(std::move(coeffs));
  out.poly.normalize();
  out.residual = (system.rows * d).norm();
  if (cols >= 2) {
    out.degenerate = (sigma[static_cast<std::size_t>(cols - 2)] -
                      sigma[static_cast<std::size_t>(cols - 1)]) <=
                     rank_tol * sigma[0];
  }
  return out;
}

RankReport numeric_rank(const FourierSpectrum& spectrum, int max_order,
                        double rank_tol) {
  if (max_order < 0) throw PreconditionError("numeric_rank: negative order");
  const int n = max_order + 1;
  if (2 * max_order + 1 > spectrum.half_window()) {
    throw PreconditionError(
        "numeric_rank: window exhausted, square truncation needs index " +
        std::to_string(2 * max_order + 1));
  }
  Eigen::MatrixXcd h(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      h(r, c) = spectrum.at(-1 - r - c);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h);
  RankReport out;
  out.singular_values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.singular_values[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  }
  const double sigma_max = out.singular_values[0];
  if (sigma_max == 0.0) {
    out.rank = 0;
    out.gap = std::numeric_limits<double>::infinity();
    return out;
  }
  int rank = 0;
  while (rank < n && out.singular_values[static_cast<std::size_t>(rank)] >
                         rank_tol * sigma_max) {
    ++rank;
  }
  out.rank = rank;
  if (rank == 0 || rank == n) {
    out.gap = std::numeric_limits<double>::infinity();
  } else {
    const double below = out.singular_values[static_cast<std::size_t>(rank)];
    out.gap = below > 0.0
                  ? out.singular_values[static_cast<std::size_t>(rank - 1)] /
                        below
                  : std::numeric_limits<double>::infinity();
  }
  return out;
}

FourierSpectrum convolve_spectrum(const ComplexPolynomial& p,
                                  const FourierSpectrum& spectrum) {
  const int deg = std::max(p.degree(), 0);
  const int k = spectrum.half_window() - deg;
  if (k < 0) {
    throw PreconditionError("convolve_spectrum: window smaller than deg(P)");
  }
  FourierSpectrum out(k, spectrum.source_grid_size());
  for (int j = -k; j <= k; ++j) {
    Complex acc(0.0);
    for (int i = 0; i <= deg; ++i) {
      acc += p.coeff(i) * spectrum.at(j - i);
    }
    out.set(j, acc);
  }
  return out;
}

double moment_residual(const ComplexPolynomial& p,
                       const FourierSpectrum& spectrum, int n_from, int n_to,
                       double scale) {
  const int deg = std::max(p.degree(), 0);
  if (n_to + deg > spectrum.half_window()) {
    throw PreconditionError(
        "moment_residual: window exhausted at depth " +
        std::to_string(n_to + deg));
  }
  double worst = 0.0;
  for (int n = n_from; n <= n_to; ++n) {
    Complex acc(0.0);
    for (int i = 0; i <= deg; ++i) {
      acc += p.coeff(i) * spectrum.at(-n - i);
    }
    worst = std::max(worst, std::abs(acc));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace cauchyscope
