#pragma once

#include <vector>

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/complex_polynomial.hpp"
#include "cauchyscope/common.hpp"

namespace cauchyscope {

enum class Verdict {
  ExtendsHolomorphically,
  ExtendsMeromorphically,
  NoExtensionWithinBudget,
};

const char* to_string(Verdict v);

struct Pole {
  Complex location;      // inside the open disc
  int multiplicity = 1;
};

struct MeromorphicReport {
  Verdict verdict = Verdict::NoExtensionWithinBudget;
  int pole_budget = 0;
  /// Reduced denominator: interior roots only. The constant one for
  /// holomorphic verdicts; the attempted annihilator for failures.
  ComplexPolynomial denominator;
  std::vector<Pole> poles;
  /// Largest normalized moment residual over the checked indices.
  double tail_residual = 0.0;
  /// Roots found in the |z| = 1 band and deflated away.
  std::vector<Complex> boundary_roots;
  /// Moment conditions were checked for n = 1..checked_tail_depth.
  int checked_tail_depth = 0;
  /// The moment system had a (numerically) multi-dimensional null space; the
  /// deterministic representative was tested and other null vectors might
  /// behave differently.
  bool degenerate_null_space = false;
  /// sqrt(sum_{n<0} |fhat(n)|^2) / window norm -- the holomorphy gauge.
  double coanalytic_energy = 0.0;
};

struct ClassifiedRoots {
  std::vector<Pole> interior;     // clustered, with multiplicity
  std::vector<Complex> boundary;  // raw roots with ||root| - 1| < band
  std::vector<Complex> exterior;  // raw roots with |root| > 1 + band
};

/// Companion-matrix roots of `p`, partitioned by modulus against 1 with the
/// given band; interior roots are greedily clustered at `cluster_radius` and
/// reported as (centroid, multiplicity).
ClassifiedRoots classify_roots(const ComplexPolynomial& p,
                               double boundary_band, double cluster_radius);

int default_tail_depth(int pole_budget);

/// Decides whether the sampled function extends meromorphically with at most
/// `pole_budget` poles, from its Fourier window alone.
///
/// The moment system is solved at the numeric Hankel rank (never above the
/// budget) so the recovered denominator is minimal; the moment conditions
/// are then checked down to n = pole_budget + tail_depth. Boundary-band
/// roots of the denominator are deflated and re-checked; exterior roots are
/// divided out. Throws PreconditionError when the window is too small and
/// AmbiguousRootError when a boundary-band root cannot be deflated without
/// raising the residual.
MeromorphicReport detect_meromorphic(const FourierSpectrum& spectrum,
                                     int pole_budget, int tail_depth,
                                     const Tolerances& tol = {});

/// Same with tail_depth = default_tail_depth(pole_budget).
MeromorphicReport detect_meromorphic(const FourierSpectrum& spectrum,
                                     int pole_budget,
                                     const Tolerances& tol = {});

/// Scans budgets 0, 1, 2, ... up to budget_cap and returns the first report
/// with an extension verdict; the budget_cap report otherwise.
MeromorphicReport detect_minimal_budget(const FourierSpectrum& spectrum,
                                        int budget_cap,
                                        const Tolerances& tol = {});

/// Evaluates the meromorphic extension at w inside the disc:
/// H(w) = (1/2 pi i) contour integral of P f / (. - w) by the grid trapezoid
/// rule (spectrally accurate), divided by P(w), with P the reduced
/// denominator from the report. Requires an extension verdict,
/// |w| <= 1 - interior_margin and |w - pole| > pole_clearance.
Complex cauchy_extend(const BoundarySamples& f, const MeromorphicReport& report,
                      Complex w, const Tolerances& tol = {});

}  // namespace cauchyscope
