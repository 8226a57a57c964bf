#include "membranekit/projections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "membranekit/conv.hpp"
#include "membranekit/extensions.hpp"
#include "membranekit/probes.hpp"

namespace membranekit {

ProjectionFields k_fields(const MembraneParams& p, const FnPair& f) {
  return {p.alpha() * odd_part(f.f1) + p.beta() * odd_part(f.f2),
          even_part(f.f1) - even_part(f.f2)};
}

FnPair project_so(const MembraneParams& p, const FnPair& f) {
  const auto [k1, k2] = k_fields(p, f);
  const double g = p.gamma();
  const LineFn b_minus = (1.0 / g) * k1 - 0.5 * k2;
  const LineFn b_plus = (1.0 / g) * k1 + 0.5 * k2;
  const LineFn from_left = conv::integrate_from_left(g, b_minus);
  const LineFn from_right = conv::integrate_from_right(g, b_plus);
  LineFn g1 = even_part(f.f1) + (0.5 * (g + 2.0 * p.alpha())) * from_left -
              (0.5 * (g - 2.0 * p.alpha())) * from_right;
  LineFn g2 = even_part(f.f2) + (0.5 * (g + 2.0 * p.beta())) * from_right -
              (0.5 * (g - 2.0 * p.beta())) * from_left;
  return {std::move(g1), std::move(g2)};
}

FnPair project_skew(const MembraneParams& p, const FnPair& f) {
  const auto [k1, k2] = k_fields(p, f);
  const double g2 = p.gamma() * p.gamma();
  return {even_part(f.f1) + (2.0 * p.alpha() / g2) * k1 - 0.5 * k2,
          even_part(f.f2) + (2.0 * p.beta() / g2) * k1 + 0.5 * k2};
}

FnPair project_weks(const MembraneParams& p, const FnPair& f) {
  const auto [k1, k2] = k_fields(p, f);
  const double g2 = p.gamma() * p.gamma();
  return {odd_part(f.f1) - (2.0 * p.alpha() / g2) * k1 + 0.5 * k2,
          odd_part(f.f2) - (2.0 * p.beta() / g2) * k1 - 0.5 * k2};
}

FnPair complement_os(const MembraneParams& p, const FnPair& f) { return f - project_so(p, f); }

namespace {

double node_max(const LineFn& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double range_residual_skew(const MembraneParams& p, const FnPair& g) {
  return std::max(node_max(even_part(g.f1) - even_part(g.f2)),
                  node_max(p.beta() * odd_part(g.f1) - p.alpha() * odd_part(g.f2)));
}

double range_residual_weks(const MembraneParams& p, const FnPair& g) {
  return std::max(node_max(even_part(g.f1) + even_part(g.f2)),
                  node_max(p.alpha() * odd_part(g.f1) + p.beta() * odd_part(g.f2)));
}

namespace {

double objective(const FnPair& g, const FnPair& f, int k_max) {
  const int n = f.grid().n_half();
  double acc = 0.0;
  for (int k = -k_max; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(k + n);
    const double d1 = g.f1.values()[i] - f.f1.values()[i];
    const double d2 = g.f2.values()[i] - f.f2.values()[i];
    const double w = (k == -k_max || k == k_max) ? 0.5 : 1.0;
    acc += w * (d1 * d1 + d2 * d2);
  }
  return acc * f.grid().step();
}

}  // namespace

LeastSquaresReport least_squares_gap(const MembraneParams& p, const FnPair& f, double y,
                                     int trials, double size, std::uint64_t seed) {
  if (!(y > 0.0) || y > f.grid().x_max()) {
    throw std::invalid_argument("least_squares_gap needs 0 < y <= x_max");
  }
  const int k_max = static_cast<int>(std::floor(y / f.grid().step() + 1e-9));
  const FnPair g = project_skew(p, f);
  const double base = objective(g, f, k_max);
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const LineFn q = random_smooth(f.grid(), rng, size);
    best = std::min(best, objective(g + extend_skew(p, q), f, k_max));
  }
  if (trials <= 0) best = base;
  return {base, best, best - base, trials};
}

}  // namespace membranekit
