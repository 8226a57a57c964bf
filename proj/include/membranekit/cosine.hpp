#pragma once

#include <string_view>

#include "membranekit/function_space.hpp"

namespace membranekit {

/// The four families built by the Kelvin formula C(t) = R C_D(t) E.
enum class Family {
  snapping_out,  ///< s-o: transmission conditions f'(0-) = alpha [f], f'(0+) = beta [f]
  skew,          ///< skew Brownian motion on continuous functions
  complementary, ///< o-s: complementary family on opposite-valued functions
  weks,          ///< n -> inf limit of the complementary family
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// C(t) f (x) = (f(x + t) + f(x - t)) / 2. Off-grid arguments are linearly
/// interpolated; beyond the grid the tail model of f is used. The result
/// carries constant tails at f's limits.
LineFn basic_cosine(double t, const LineFn& f);

/// C_D(t)(f1, f2) = (C(t) f1, C(t) f2).
FnPair product_cosine(double t, const FnPair& p);

/// R C_D(t) F, evaluating only the halves the restriction keeps.
SharpFn restricted_cosine(double t, const FnPair& extension);

/// Extension operator of a family. Throws std::domain_error when f is not in
/// the family's space (continuous for skew, opposite-valued for o-s and weks).
FnPair extend(Family family, const MembraneParams& p, const SharpFn& f, double tol = 1e-9);

/// C_family(t) f = R C_D(t) E_family f.
SharpFn kelvin_cosine(Family family, const MembraneParams& p, double t, const SharpFn& f,
                      double tol = 1e-9);

/// Skew cosine family on FC[-inf,inf]; the output is again continuous at 0.
LineFn skew_cosine(const MembraneParams& p, double t, const LineFn& f);

/// 2 (C(t) f - f) / t^2, the cosine-family generator quotient.
LineFn generator_quotient(double t, const LineFn& f);

}  // namespace membranekit
