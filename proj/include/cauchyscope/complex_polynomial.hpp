#pragma once

#include <vector>

#include "cauchyscope/common.hpp"

namespace cauchyscope {

/// Dense polynomial c_0 + c_1 z + ... + c_d z^d with complex coefficients.
///
/// Trailing exact-zero coefficients are trimmed, so degree() is the index of
/// the highest stored coefficient (-1 for the zero polynomial). Values are
/// immutable apart from normalize().
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  static ComplexPolynomial constant(Complex c);
  static ComplexPolynomial one() { return constant(1.0); }
  /// c * z^k
  static ComplexPolynomial monomial(int k, Complex c = 1.0);
  /// leading * (z - r_1) ... (z - r_n)
  static ComplexPolynomial from_roots(std::span<const Complex> roots,
                                      Complex leading = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero outside the stored range.
  Complex coeff(int k) const;

  Complex operator()(Complex z) const;

  ComplexPolynomial derivative() const;

  /// Quotient of division by (z - root); the remainder is dropped. The
  /// recurrence direction is chosen from |root| so the division is stable on
  /// both sides of the unit circle.
  ComplexPolynomial deflated(Complex root) const;

  /// All complex roots, as eigenvalues of the companion matrix.
  std::vector<Complex> roots() const;

  /// Taylor coefficients of the polynomial about `center`, up to `order`
  /// inclusive (coefficients of (z - center)^l).
  std::vector<Complex> taylor_at(Complex center, int order) const;

  /// Scales so the largest-modulus coefficient has modulus one, then rotates
  /// the global phase so that coefficient is real and positive. Ties pick the
  /// lowest index. No-op on the zero polynomial.
  ComplexPolynomial& normalize();

  double max_coeff_modulus() const;
  double coeff_norm2() const;

  ComplexPolynomial operator-() const;
  friend ComplexPolynomial operator+(const ComplexPolynomial&,
                                     const ComplexPolynomial&);
  friend ComplexPolynomial operator-(const ComplexPolynomial&,
                                     const ComplexPolynomial&);
  friend ComplexPolynomial operator*(const ComplexPolynomial&,
                                     const ComplexPolynomial&);
  friend ComplexPolynomial operator*(Complex, const ComplexPolynomial&);

 private:
  void trim();

  std::vector<Complex> coeffs_;  // empty == zero polynomial
};

}  // namespace cauchyscope
