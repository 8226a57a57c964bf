#pragma once

// n-sweeps over scaled permeabilities (n alpha, n beta), Cesaro means and the
// mirror identity between the weks and skew families.

#include <functional>
#include <optional>
#include <vector>

#include "membranekit/cosine.hpp"
#include "membranekit/function_space.hpp"
#include "membranekit/parallel.hpp"
#include "membranekit/semigroup.hpp"

namespace membranekit {

struct ConvergenceReport {
  std::vector<int> n_values;
  std::vector<double> errors;
  /// Cauchy differences ||T_{n_{i+1}} - T_{n_i}||; filled by sweeps whose limit
  /// has no closed form (size n_values.size() - 1), empty otherwise.
  std::vector<double> cauchy;
  double fitted_order = 0.0;
  std::optional<double> k_theory;
  double lipschitz = 0.0;

  /// k_theory / n for each n, or empty when there is no rate constant.
  std::vector<double> bounds() const;
  /// errors[i] <= k_theory / n_i + budget for all i; false without k_theory.
  bool within_envelope(double budget) const;
};

/// Negative least-squares slope of log(error) against log(n), over positive errors.
double fit_order(const std::vector<int>& n_values, const std::vector<double>& errors);

struct SweepOptions {
  int threads = 1;
  /// Lipschitz constant of the probe; estimated from node slopes when absent.
  std::optional<double> lipschitz;
  WeierstrassOptions weierstrass;
};

/// K = 2 max(alpha, beta) L / (alpha + beta)^2.
double rate_constant_so(const MembraneParams& p, double lipschitz);
/// K = 2 L / (alpha + beta), L the Lipschitz constant of J f.
double rate_constant_os(const MembraneParams& p, double lipschitz);

/// ||E^{s-o}_{n alpha, n beta} f - E^{skew} f|| over n.
ConvergenceReport sweep_extension(const MembraneParams& p, const LineFn& f,
                                  const std::vector<int>& n_values, const SweepOptions& opt = {});

/// max over t_grid of ||C^{s-o}_n(t) f - C^{skew}(t) f||.
ConvergenceReport sweep_cosine(const MembraneParams& p, const LineFn& f,
                               const std::vector<int>& n_values, const std::vector<double>& t_grid,
                               const SweepOptions& opt = {});

/// For f with a jump: ||C^{s-o}_n(t) f - R C_D(t) E_lim f|| where E_lim is the
/// pointwise limit of the extensions. The cosine families do not converge, so
/// the errors stay of the order of the jump.
ConvergenceReport sweep_divergence(const MembraneParams& p, const SharpFn& f,
                                   const std::vector<int>& n_values, double t,
                                   const SweepOptions& opt = {});

/// Semigroup sweep. Continuous f is compared with the skew semigroup; for f
/// with a jump the errors are taken against the largest n and the consecutive
/// Cauchy differences are recorded.
ConvergenceReport sweep_semigroup(const MembraneParams& p, const SharpFn& f,
                                  const std::vector<int>& n_values,
                                  const std::vector<double>& t_grid, const SweepOptions& opt = {});

/// ||P^{s-o}_{n alpha, n beta} F - P^{skew} F|| over n.
ConvergenceReport sweep_projection(const MembraneParams& p, const FnPair& f,
                                   const std::vector<int>& n_values, const SweepOptions& opt = {});

/// Complementary families on opposite-valued f. An empty t_grid compares the
/// extensions E^{o-s}_n f and E^{weks} f, otherwise the cosine families.
ConvergenceReport sweep_weks(const MembraneParams& p, const SharpFn& f,
                             const std::vector<int>& n_values, const std::vector<double>& t_grid,
                             const SweepOptions& opt = {});

/// T^{-1} int_0^T C(s) f ds by the trapezoid rule with step h on the lattice;
/// T is rounded to a multiple of h. Translations past the grid read the tails.
SharpFn cesaro_mean(Family family, const MembraneParams& p, const SharpFn& f, double t);

/// beta/(alpha+beta) f(-inf) + alpha/(alpha+beta) f(inf), as a constant.
double mean_m(const MembraneParams& p, double lim_minus, double lim_plus);

/// Two-sided constant: left (alpha f(-inf) - beta f(inf))/(alpha+beta), right its negative.
struct TwoSided {
  double left;
  double right;
};
TwoSided mean_n(const MembraneParams& p, double lim_minus, double lim_plus);

/// max over t of ||J C^{weks}_{alpha,beta}(t) f - C^{skew}_{beta,alpha}(t) J f||.
double mirror_check(const MembraneParams& p, const SharpFn& f, const std::vector<double>& t_grid);

}  // namespace membranekit
