#pragma once

#include <string>

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/common.hpp"

namespace cauchyscope {

/// Built-in boundary-function mini-language for the CLI and tests:
///
///   pole:a[,b,...]      1 / prod (z - a_i); repeated entries raise the
///                       multiplicity. Entries are complex literals.
///   poly:<expr>         polynomial, either comma-separated coefficients
///                       c0,c1,... or monomial-sum syntax like "z^3 + 2".
///   cpoly:<expr>        conj(p(z)) on the circle, p as in poly (purely
///                       coanalytic inputs such as z^-2 = cpoly:z^2).
///   conj-rational:a[,b,...]   conj(1 / prod (z - a_i)).
///   lacunary:<k>        sum_{j=1..k} 2^-j z^{-3^j}.
///   paper-6             z / (z - 1/2).
///
/// Complex literals: "0.5", "-0.3+0.2i", "1i".
BoundaryFunction parse_generator(const std::string& text);

/// One-line description of the accepted syntax, for --help output.
std::string generator_grammar();

Complex parse_complex(const std::string& text);

}  // namespace cauchyscope
