#pragma once

// Named test functions with closed-form limits at +-inf, and random smooth
// members of FC[-inf,inf] for property tests.

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "membranekit/function_space.hpp"

namespace membranekit {

struct Probe {
  std::string name;
  std::function<double(double)> left;   ///< used on x <= 0 (x == 0 gives f(0-))
  std::function<double(double)> right;  ///< used on x >= 0 (x == 0 gives f(0+))
  double lim_minus;
  double lim_plus;
  bool continuous;
  bool opposite;
  /// Lipschitz constant of f (continuous probes) or of J f (opposite-valued ones).
  double lipschitz;
};

/// const, step, tanh, gauss, gauss-shift, ov-tanh, ov-gauss.
const Probe& probe(std::string_view name);
std::vector<std::string> probe_names();

SharpFn sample_sharp(const Probe& pr, const Grid& grid);
/// Throws std::domain_error for probes with a jump.
LineFn sample_line(const Probe& pr, const Grid& grid);

/// Constant plus a tanh ramp plus Gaussian-windowed sinusoids; scaled so the
/// sup over the grid equals `bound`. Residual beyond |x| = 10 is below 1e-8.
LineFn random_smooth(const Grid& grid, std::mt19937_64& rng, double bound = 1.0);
FnPair random_pair(const Grid& grid, std::mt19937_64& rng, double bound = 1.0);
/// Two independent smooth branches; generically jumps at 0.
SharpFn random_sharp(const Grid& grid, std::mt19937_64& rng, double bound = 1.0);
/// J_inv of a random smooth function.
SharpFn random_opposite(const Grid& grid, std::mt19937_64& rng, double bound = 1.0);

/// Largest slope between neighbouring nodes of either branch.
double estimate_lipschitz(const SharpFn& f);
double estimate_lipschitz(const LineFn& f);

}  // namespace membranekit
