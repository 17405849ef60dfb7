#pragma once

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/complex_polynomial.hpp"
#include "cauchyscope/common.hpp"

namespace cauchyscope {

struct WindingResult {
  int winding = 0;
  double min_modulus = 0.0;     // min over the grid of |phi|
  double max_phase_step = 0.0;  // max |principal arg(phi_{j+1}/phi_j)|
};

/// 1e-8 times the largest sample modulus.
double default_min_mod_tol(const BoundarySamples& samples);

/// Winding number of a nonvanishing sampled loop around the origin:
/// accumulated principal-value argument steps divided by 2 pi, rounded to the
/// nearest integer.
///
/// Fails honestly instead of aliasing:
///  - a sample with |value| < min_mod_tol  -> PreconditionError (reports the
///    grid index),
///  - any phase step with magnitude >= pi/2, or an accumulated total farther
///    than 0.1 from an integer -> ResolutionError (caller resamples finer).
WindingResult winding_number(const BoundarySamples& samples,
                             double min_mod_tol);

/// Adaptive variant: resamples `generator` at doubled grid sizes (up to
/// `refine_budget` doublings) while the fixed-grid computation reports a
/// resolution failure. min_mod_tol is taken relative to the grid max modulus.
WindingResult winding_number(const BoundaryFunction& generator, int grid_size,
                             double min_mod_rel = 1e-8, int refine_budget = 3);

/// Samples of P(z) f(z) + Q(z) on f's grid.
BoundarySamples composite_samples(const BoundarySamples& f,
                                  const ComplexPolynomial& p,
                                  const ComplexPolynomial& q);

/// winding_number applied to P f + Q. Throws PreconditionError when P and Q
/// are both identically zero.
WindingResult composite_winding(const BoundarySamples& f,
                                const ComplexPolynomial& p,
                                const ComplexPolynomial& q,
                                double min_mod_tol);

}  // namespace cauchyscope
