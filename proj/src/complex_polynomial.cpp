#include "cauchyscope/complex_polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace cauchyscope {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void ComplexPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) {
    coeffs_.pop_back();
  }
}

ComplexPolynomial ComplexPolynomial::constant(Complex c) {
  return ComplexPolynomial(std::vector<Complex>{c});
}

ComplexPolynomial ComplexPolynomial::monomial(int k, Complex c) {
  if (k < 0) throw PreconditionError("monomial: negative degree");
  std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1, Complex(0.0));
  coeffs.back() = c;
  return ComplexPolynomial(std::move(coeffs));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots,
                                                Complex leading) {
  std::vector<Complex> coeffs{leading};
  for (Complex r : roots) {
    coeffs.push_back(Complex(0.0));
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) {
      coeffs[k] = coeffs[k - 1] - r * coeffs[k];
    }
    coeffs[0] = -r * coeffs[0];
  }
  return ComplexPolynomial(std::move(coeffs));
}

Complex ComplexPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return ComplexPolynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::deflated(Complex root) const {
  const int d = degree();
  if (d < 1) return ComplexPolynomial();
  std::vector<Complex> q(static_cast<std::size_t>(d));
  if (std::abs(root) <= 1.0) {
    // top-down Horner recurrence, stable for roots inside the closed disc
    q[d - 1] = coeffs_[d];
    for (int k = d - 1; k >= 1; --k) {
      q[k - 1] = coeffs_[k] + root * q[k];
    }
  } else {
    // bottom-up recurrence divides by the root each step, stable outside
    q[0] = -coeffs_[0] / root;
    for (int k = 1; k < d; ++k) {
      q[k] = (q[k - 1] - coeffs_[k]) / root;
    }
  }
  return ComplexPolynomial(std::move(q));
}

std::vector<Complex> ComplexPolynomial::roots() const {
  const int d = degree();
  if (d < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const Complex lead = coeffs_.back();
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs_[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[i] = solver.eigenvalues()(i);
  // deterministic order: by real part, then imaginary
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<Complex> ComplexPolynomial::taylor_at(Complex center,
                                                  int order) const {
  // repeated synthetic division collects the Taylor coefficients
  std::vector<Complex> work = coeffs_;
  if (work.empty()) work.push_back(Complex(0.0));
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int l = 0; l <= order; ++l) {
    Complex rem(0.0);
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      rem = rem * center + *it;
    }
    out.push_back(rem);
    // divide work by (z - center): quotient replaces work
    if (work.size() <= 1) {
      work.assign(1, Complex(0.0));
      continue;
    }
    std::vector<Complex> q(work.size() - 1);
    q.back() = work.back();
    for (int k = static_cast<int>(work.size()) - 2; k >= 1; --k) {
      q[k - 1] = work[k] + center * q[k];
    }
    work = std::move(q);
  }
  return out;
}

ComplexPolynomial& ComplexPolynomial::normalize() {
  if (coeffs_.empty()) return *this;
  std::size_t arg_max = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double m = std::abs(coeffs_[k]);
    if (m > best) {
      best = m;
      arg_max = k;
    }
  }
  if (best <= 0.0) return *this;
  const Complex factor = Complex(1.0) / coeffs_[arg_max];
  for (Complex& c : coeffs_) c *= factor;
  coeffs_[arg_max] = Complex(1.0, 0.0);  // pin the pivot exactly
  return *this;
}

double ComplexPolynomial::max_coeff_modulus() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double ComplexPolynomial::coeff_norm2() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

ComplexPolynomial ComplexPolynomial::operator-() const {
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial operator+(const ComplexPolynomial& a,
                            const ComplexPolynomial& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                           Complex(0.0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial operator-(const ComplexPolynomial& a,
                            const ComplexPolynomial& b) {
  return a + (-b);
}

ComplexPolynomial operator*(const ComplexPolynomial& a,
                            const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ComplexPolynomial();
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                           Complex(0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
  std::vector<Complex> out(p.coeffs_.size());
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = s * p.coeffs_[k];
  return ComplexPolynomial(std::move(out));
}

}  // namespace cauchyscope
