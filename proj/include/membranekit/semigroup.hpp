#pragma once

// Semigroups generated by the cosine families, via the Weierstrass formula
//   T(t) f = (4 pi t)^{-1/2} int exp(-s^2 / (4t)) C(s) f ds.
//
// Two quadratures are provided. The lattice rule integrates the Gaussian
// exactly against hat functions centred on multiples of the grid step, which
// is exact for the piecewise-linear data the library stores: for a node x,
// s -> C(s) f (x) is linear between lattice points. It is the default. The
// Gauss-Hermite rule samples C(2 sqrt(t) u_k) f and converges spectrally on
// smooth data but not on extensions with kinks or steep boundary layers.

#include <vector>

#include "membranekit/cosine.hpp"
#include "membranekit/function_space.hpp"

namespace membranekit {

/// Nodes and weights for int exp(-u^2) g(u) du / sqrt(pi); weights sum to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  static QuadratureRule gauss_hermite(int m);
  std::size_t size() const noexcept { return nodes.size(); }
};

enum class WeierstrassScheme { lattice, gauss_hermite };

struct WeierstrassOptions {
  WeierstrassScheme scheme = WeierstrassScheme::lattice;
  int hermite_nodes = 40;
  /// Lattice rule truncates the Gaussian at cutoff * sqrt(2t).
  double cutoff = 9.0;
};

/// Symmetric lattice weights w_0..w_M for N(0, 2t) against hats of width h,
/// normalised so that w_0 + 2 sum_{m>=1} w_m = 1.
std::vector<double> lattice_heat_weights(double t, double h, double cutoff = 9.0);

/// Heat semigroup of the basic cosine family on one function.
LineFn heat(double t, const LineFn& f, const WeierstrassOptions& opts = {});

/// R applied to the Weierstrass integral of C_D(s) on an extension pair.
SharpFn restricted_heat(double t, const FnPair& extension, const WeierstrassOptions& opts = {});

/// e^{tA} f for the family; t == 0 returns f, t < 0 throws.
SharpFn weierstrass(Family family, const MembraneParams& p, double t, const SharpFn& f,
                    const WeierstrassOptions& opts = {});

/// Skew semigroup on FC[-inf,inf].
LineFn weierstrass_skew(const MembraneParams& p, double t, const LineFn& f,
                        const WeierstrassOptions& opts = {});

/// One-sided derivatives at the membrane from second-order stencils.
struct BoundaryDerivatives {
  double d1_minus;  ///< f'(0-)
  double d1_plus;   ///< f'(0+)
  double d2_minus;  ///< f''(0-)
  double d2_plus;   ///< f''(0+)
};
BoundaryDerivatives boundary_derivatives(const SharpFn& f);

struct Residuals {
  double r1;
  double r2;
};

/// r1 = f'(0-) - alpha [f], r2 = f'(0+) - beta [f], [f] = f(0+) - f(0-).
Residuals domain_residual_so(const MembraneParams& p, const SharpFn& f);
/// r1 = f''(0+) - f''(0-), r2 = beta f'(0-) - alpha f'(0+).
Residuals domain_residual_skew(const MembraneParams& p, const LineFn& f);
/// r1 = f''(0+) - alpha f'(0-) - beta f'(0+), r2 = f''(0+) + f''(0-).
Residuals domain_residual_os(const MembraneParams& p, const SharpFn& f);

}  // namespace membranekit
