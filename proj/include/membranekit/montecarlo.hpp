#pragma once

// Particle estimates of E f(X_t) for skew and snapping-out Brownian motion
// with generator f'' (random-walk steps of size sqrt(2 dt)).

#include <cstdint>
#include <optional>

#include "membranekit/function_space.hpp"

namespace membranekit {

struct PathConfig {
  long n_paths = 10000;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  /// Start point; rounded to the walk lattice.
  double x0 = 0.0;
  /// Membrane side for x0 == 0 in the snapping-out walk.
  std::optional<Side> side;
  /// Pair each path with its mirror image (sign-flipped increments).
  bool antithetic = false;
  int threads = 1;
};

struct McEstimate {
  double mean;
  double std_error;
  long n_paths;
};

/// Walk on the lattice sqrt(2 dt) Z; from 0 it steps right with probability
/// alpha / (alpha + beta). f is read at the position reached after floor(t / dt) steps.
McEstimate simulate_skew(const MembraneParams& p, const PathConfig& cfg, double t, const LineFn& f);

/// Reflected walks on each half-line. A step taken from 0+ switches to 0-
/// with probability beta sqrt(2 dt), from 0- to 0+ with probability
/// alpha sqrt(2 dt); otherwise it moves away from the membrane.
/// Throws std::invalid_argument if a switch probability exceeds 1, or if
/// x0 == 0 without a side.
McEstimate simulate_snapping(const MembraneParams& p, const PathConfig& cfg, double t,
                             const SharpFn& f);

}  // namespace membranekit
