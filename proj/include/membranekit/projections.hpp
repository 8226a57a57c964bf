#pragma once

// Projections on the space of pairs C = (FC[-inf,inf])^2.

#include <cstdint>

#include "membranekit/function_space.hpp"

namespace membranekit {

struct ProjectionFields {
  LineFn k1;  ///< alpha f1^o + beta f2^o, odd
  LineFn k2;  ///< f1^e - f2^e, even
};

ProjectionFields k_fields(const MembraneParams& p, const FnPair& f);

/// Snapping-out projection:
///   g1 = f1^e + (gamma + 2 alpha)/2 int_{-inf}^x b_-(y) e^{-gamma (x-y)} dy
///             - (gamma - 2 alpha)/2 int_x^{inf}  b_+(y) e^{ gamma (x-y)} dy,
///   g2 = f2^e + (gamma + 2 beta)/2  int_x^{inf}  b_+ ... - (gamma - 2 beta)/2 int_{-inf}^x b_- ...,
/// with b_-+ = k1 / gamma -+ k2 / 2.
FnPair project_so(const MembraneParams& p, const FnPair& f);

/// (f1^e + 2 alpha k1 / gamma^2 - k2 / 2, f2^e + 2 beta k1 / gamma^2 + k2 / 2).
FnPair project_skew(const MembraneParams& p, const FnPair& f);

/// (f1^o - 2 alpha k1 / gamma^2 + k2 / 2, f2^o - 2 beta k1 / gamma^2 - k2 / 2).
FnPair project_weks(const MembraneParams& p, const FnPair& f);

/// f - project_so(f).
FnPair complement_os(const MembraneParams& p, const FnPair& f);

/// max over nodes of |g1^e - g2^e| and |beta g1^o - alpha g2^o|.
double range_residual_skew(const MembraneParams& p, const FnPair& g);
/// max over nodes of |g1^e + g2^e| and |alpha g1^o + beta g2^o|.
double range_residual_weks(const MembraneParams& p, const FnPair& g);

struct LeastSquaresReport {
  double objective;        ///< L(project_skew(F))
  double best_perturbed;   ///< min of L over the perturbations
  double gap;              ///< best_perturbed - objective
  int trials;
};

/// L(G) = int_{-y}^{y} (g1 - f1)^2 + (g2 - f2)^2 dx by the trapezoid rule, at
/// G = project_skew(F) and at G + extend_skew(q) for random smooth q with
/// sup |q| <= size. Requires y <= x_max.
LeastSquaresReport least_squares_gap(const MembraneParams& p, const FnPair& f, double y,
                                     int trials, double size, std::uint64_t seed);

}  // namespace membranekit
