#pragma once

// Extension operators: each maps a function on R# (or [-inf,inf]) to the pair
// (f_l, f_r) of whole-line extensions of its left and right parts that the
// corresponding boundary or transmission conditions single out.

#include "membranekit/function_space.hpp"

namespace membranekit {

/// Snapping-out extension. For x > 0
///   f_l(x) = f(-x) + 2 alpha (e_{a} * [f - f^T])(x),  a = alpha + beta,
/// and f_r mirrors it with -2 beta. Past the grid both components relax
/// exponentially (rate a) towards their exact limits.
FnPair extend_so(const MembraneParams& p, const SharpFn& f);

/// Skew extension of a continuous f: f_l(x) = ((beta - alpha) f(-x) + 2 alpha f(x)) / (alpha + beta)
/// for x > 0, f_r(x) = (2 beta f(x) + (alpha - beta) f(-x)) / (alpha + beta) for x < 0.
FnPair extend_skew(const MembraneParams& p, const LineFn& f);

/// Complementary extension of an opposite-valued f (f(0+) = -f(0-)).
/// Throws std::domain_error otherwise.
FnPair extend_os(const MembraneParams& p, const SharpFn& f, double tol = 1e-9);

/// n -> inf limit of the complementary extension, again on opposite-valued f.
FnPair extend_weks(const MembraneParams& p, const SharpFn& f, double tol = 1e-9);

/// Pointwise limit of extend_so(n alpha, n beta, f) for any f on R#: the skew
/// formulas applied branch by branch. For a jump at 0 the components jump at
/// 0 too; node 0 carries f(0-) in f_l and f(0+) in f_r.
FnPair limit_extension_so(const MembraneParams& p, const SharpFn& f);

}  // namespace membranekit
