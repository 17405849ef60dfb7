#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cauchyscope {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A stated precondition of an operation was violated (bad window, bad grid,
/// malformed input).
class PreconditionError : public Error {
  using Error::Error;
};

/// A quantity could not be resolved at the current grid resolution
/// (winding aliasing after the refinement budget, no admissible Fejer order).
class ResolutionError : public Error {
  using Error::Error;
};

/// An evaluation point lies outside the admissible region (too close to the
/// boundary circle or to a recovered pole).
class EvaluationDomainError : public Error {
  using Error::Error;
};

/// A bounded search exhausted its budget without an admissible candidate.
class SearchError : public Error {
  using Error::Error;
};

/// A constructed zero-free completion failed its own verification.
class CompletionError : public Error {
  using Error::Error;
};

/// Input data is too ill-conditioned to certify (pole hugging the circle).
class ConditioningError : public Error {
  using Error::Error;
};

/// A denominator root sits in the boundary band but cannot be deflated
/// without raising the moment residual; carries the offending root.
class AmbiguousRootError : public Error {
 public:
  AmbiguousRootError(const std::string& what, Complex root)
      : Error(what), root_(root) {}
  Complex root() const { return root_; }

 private:
  Complex root_;
};

/// Numerical tolerance hierarchy. Relative unless stated otherwise.
struct Tolerances {
  /// Coefficient noise floor, relative to the largest coefficient modulus.
  double coeff_floor = 1e-10;
  /// Singular-value cliff for rank and annihilator-degeneracy decisions.
  double rank_tol = 1e-8;
  /// Ceiling on the normalized moment-condition residual.
  double tail_tol = 1e-7;
  /// Half-width of the |z| = 1 band used when classifying denominator roots.
  double boundary_band = 1e-6;
  /// Greedy root-clustering radius for multiplicity assignment (absolute).
  double cluster_radius = 1e-4;
  /// Minimum distance from a pole at which the extension is evaluated
  /// (absolute).
  double pole_clearance = 1e-3;
  /// Series evaluation is restricted to |z| <= 1 - interior_margin.
  double interior_margin = 1e-3;
  /// Nonvanishing threshold for winding computations, relative to the
  /// largest sample modulus.
  double min_mod_rel = 1e-8;
  /// Gate for the vanishing-coefficient pattern required by the structured
  /// witness construction, relative to the anchor coefficient.
  double pattern_rel = 1e-9;
};

/// Sum with a fixed pairwise association order. Deterministic run to run and
/// O(log n) rounding growth.
Complex pairwise_sum(std::span<const Complex> terms);
double pairwise_sum(std::span<const double> terms);

}  // namespace cauchyscope
