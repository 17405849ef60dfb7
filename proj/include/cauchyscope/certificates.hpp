#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/complex_polynomial.hpp"
#include "cauchyscope/common.hpp"
#include "cauchyscope/rational_oracle.hpp"
#include "cauchyscope/winding.hpp"

namespace cauchyscope {

enum class CertificateKind {
  Falsifier,    // winding <= -(budget + 1): no extension with <= budget poles
  Consistency,  // winding >= -budget
};

const char* to_string(CertificateKind k);

/// An explicit pair (P, Q) together with the verified winding of P f + Q and
/// its minimum boundary modulus.
struct WindingCertificate {
  ComplexPolynomial p;
  ComplexPolynomial q;
  int winding = 0;
  double min_modulus = 0.0;
  CertificateKind kind = CertificateKind::Consistency;
  int pole_budget = 0;
};

/// Structured witness: when the coefficient pattern
///   fhat(-N-1) != 0,  fhat(-j) = 0 for j = 1..N and j = N+2..2N+1
/// holds (at pattern_rel tolerance), constructs Q from the smallest Fejer
/// order m whose mean approximates z^{N+1} f within 1/2 on the grid, so that
/// f + Q winds exactly -N-1. Throws PreconditionError naming the offending
/// index when the pattern fails, ResolutionError when no admissible m exists
/// in the window.
WindingCertificate pattern_witness(const FourierSpectrum& spectrum,
                                   const BoundarySamples& samples, int budget,
                                   const Tolerances& tol = {});

struct FalsifyOutcome {
  /// Present when a falsifier was found; empty means the moment tail is
  /// numerically zero and f extends within the budget ("no falsifier
  /// found").
  std::optional<WindingCertificate> certificate;
  double tail_residual = 0.0;  // same yardstick as the detector
  int degree_cap = 0;          // falsifier degree is capped by the window
  std::string note;
};

/// Falsification pipeline: annihilate the first `budget` negative moments,
/// split off the analytic partial sum F1 of P f, and search a shrinking ring
/// of offsets alpha so that P f - F1 + alpha is nonvanishing and winds at
/// most -(budget+1). Returns "no falsifier found" when the remaining
/// coanalytic tail is below tail_tol. Throws SearchError with diagnostics
/// when the offset budget is exhausted.
FalsifyOutcome falsify(const FourierSpectrum& spectrum,
                       const BoundarySamples& samples, int budget,
                       const Tolerances& tol = {});

struct JetPoint {
  Complex location;  // inside the open disc
  int order = 1;     // multiplicity p_j >= 1
};

struct ZeroFreeCompletion {
  ComplexPolynomial q;    // Psi + prod (z - a_j)^{p_j} * q is zero-free
  ComplexPolynomial phi;  // interpolated exponent (diagnostic)
  double min_modulus = 0.0;
  int winding = 0;  // verified zero
};

/// Builds a polynomial Q such that Psi + prod (z-a_j)^{p_j} Q has no zero on
/// the closed disc: a Hermite interpolant Phi matches the logarithmic jet
/// data of Psi at each a_j through order p_j, and Q is the truncated series
/// quotient (e^Phi - Psi) / prod (z-a_j)^{p_j}. The result is verified by
/// minimum boundary modulus and winding zero; CompletionError on failure.
/// Psi must be a disc-algebra window (coanalytic energy at the noise floor)
/// with Psi(a_j) != 0.
ZeroFreeCompletion zero_free_completion(const FourierSpectrum& psi,
                                        const std::vector<JetPoint>& points,
                                        const Tolerances& tol = {});

struct SQProbeReport {
  int pole_count = 0;       // poles of f inside the disc, with multiplicity
  int special_winding = 0;  // winding of f + S Q* for the constructed Q*
  WindingCertificate special;
  std::vector<int> draw_windings;  // admissible random draws of W(f + S Q)
  int min_draw_winding = 0;
  int admissible_draws = 0;
  bool draws_consistent = false;  // every draw >= -pole_count
};

/// Exercises the factored-denominator winding identity: builds the special Q
/// via zero_free_completion over the pole set of f joined with the roots of
/// S, checks W(f + S Q*) == -pole_count, and samples random draws for
/// consistency. S must have all roots inside the disc and no common zero
/// with the extension of f.
SQProbeReport check_sq_windings(const RationalFunction& f,
                                const ComplexPolynomial& s, int draws,
                                std::uint64_t seed, int grid_size,
                                const Tolerances& tol = {});

}  // namespace cauchyscope
