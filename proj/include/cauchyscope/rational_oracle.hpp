#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/complex_polynomial.hpp"
#include "cauchyscope/common.hpp"

namespace cauchyscope {

struct RootEntry {
  Complex location;
  int multiplicity = 1;
};

/// Rational function in factored form:
///   scale * prod (z - zero_i)^{m_i} / prod (z - pole_j)^{k_j}.
/// Reduced: no zero coincides with a pole. The exact reference for winding
/// numbers, negative Fourier coefficients, and extension values.
class RationalFunction {
 public:
  RationalFunction(std::vector<RootEntry> zeros, std::vector<RootEntry> poles,
                   Complex scale);

  const std::vector<RootEntry>& zeros() const { return zeros_; }
  const std::vector<RootEntry>& poles() const { return poles_; }
  Complex scale() const { return scale_; }

  Complex operator()(Complex z) const;

  /// Numerator / denominator coefficient lists (expanded from the factored
  /// form).
  std::pair<ComplexPolynomial, ComplexPolynomial> as_fraction() const;

  int zeros_in_disc() const;  // with multiplicity, |z| < 1
  int poles_in_disc() const;

  double min_pole_distance_to_circle() const;
  double min_zero_distance_to_circle() const;

  BoundarySamples sample_boundary(int grid_size) const;
  BoundaryFunction boundary_function() const;

 private:
  std::vector<RootEntry> zeros_;
  std::vector<RootEntry> poles_;
  Complex scale_;
};

/// fhat(-1), ..., fhat(-depth) in closed form by partial fractions: a simple
/// pole a inside the circle with local residue c contributes c a^{k-1} to
/// fhat(-k); higher multiplicities use the derivative formula; poles outside
/// the circle contribute nothing. Throws ConditioningError when a pole is
/// within 1e-3 of the circle.
std::vector<Complex> exact_negative_coefficients(const RationalFunction& r,
                                                 int depth);

/// Zeros minus poles inside the open disc, with multiplicity. Throws
/// PreconditionError when a zero or pole is within 1e-9 of the circle.
int exact_winding(const RationalFunction& r);

/// Seed-deterministic random instance: total pole multiplicity uniform in
/// {0..max_poles} and placed uniformly in |z| <= pole_radius_cap, zeros
/// likewise; per-root multiplicity at most 3; distinct locations kept at
/// least 0.15 apart (0.2 between zeros and poles) so downstream clustering
/// is well-posed. The mapping from the mt19937_64 stream is fixed, not
/// distribution-library dependent.
RationalFunction random_rational(std::uint64_t seed, int max_poles,
                                 double pole_radius_cap);

}  // namespace cauchyscope
