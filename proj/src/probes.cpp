#include "membranekit/probes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace membranekit {

namespace {

double gauss_shift(double x) { return std::exp(-(x - 1.0) * (x - 1.0)); }

const std::map<std::string, Probe, std::less<>>& registry() {
  static const std::map<std::string, Probe, std::less<>> probes = [] {
    std::map<std::string, Probe, std::less<>> m;
    auto add = [&m](Probe p) { m.emplace(p.name, std::move(p)); };
    auto one = [](double) { return 1.0; };
    add({"const", one, one, 1.0, 1.0, true, false, 0.0});
    add({"step", [](double) { return 0.0; }, one, 0.0, 1.0, false, false, 0.0});
    auto th = [](double x) { return std::tanh(x); };
    add({"tanh", th, th, -1.0, 1.0, true, false, 1.0});
    auto g = [](double x) { return std::exp(-x * x); };
    add({"gauss", g, g, 0.0, 0.0, true, false, std::sqrt(2.0 / std::exp(1.0))});
    add({"gauss-shift", gauss_shift, gauss_shift, 0.0, 0.0, true, false,
         std::sqrt(2.0 / std::exp(1.0))});
    add({"ov-tanh", [](double x) { return -std::tanh(x); }, th, 1.0, 1.0, false, true, 1.0});
    add({"ov-gauss", [](double x) { return -gauss_shift(x); }, gauss_shift, 0.0, 0.0, false, true,
         std::sqrt(2.0 / std::exp(1.0))});
    return m;
  }();
  return probes;
}

struct SmoothParams {
  double c0;
  double c1;
  double width;
  struct Wave {
    double amp, omega, phase, centre, spread;
  };
  std::vector<Wave> waves;

  double operator()(double x) const {
    double v = c0 + c1 * std::tanh(x / width);
    for (const auto& w : waves) {
      const double z = (x - w.centre) / w.spread;
      v += w.amp * std::sin(w.omega * x + w.phase) * std::exp(-0.5 * z * z);
    }
    return v;
  }
};

SmoothParams draw_smooth(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SmoothParams s{u(rng), u(rng), 0.5 + 0.5 * unit(rng), {}};
  for (int k = 0; k < 4; ++k) {
    s.waves.push_back({u(rng), 0.2 + 1.8 * unit(rng), 6.283185307179586 * unit(rng), 1.5 * u(rng),
                       0.5 + 0.7 * unit(rng)});
  }
  return s;
}

}  // namespace

const Probe& probe(std::string_view name) {
  const auto& m = registry();
  const auto it = m.find(name);
  if (it == m.end()) throw std::invalid_argument("unknown probe '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> probe_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

SharpFn sample_sharp(const Probe& pr, const Grid& grid) {
  const int n = grid.n_half();
  std::vector<double> l(static_cast<std::size_t>(n) + 1);
  std::vector<double> r(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    l[static_cast<std::size_t>(k)] = pr.left(grid.node(k - n));
    r[static_cast<std::size_t>(k)] = pr.right(grid.node(k));
  }
  return {grid, std::move(l), std::move(r), pr.lim_minus, pr.lim_plus};
}

LineFn sample_line(const Probe& pr, const Grid& grid) {
  if (!pr.continuous) throw std::domain_error("probe '" + pr.name + "' is not continuous at 0");
  const int n = grid.n_half();
  std::vector<double> v(grid.size());
  for (int k = -n; k <= n; ++k) {
    v[static_cast<std::size_t>(k + n)] = k < 0 ? pr.left(grid.node(k)) : pr.right(grid.node(k));
  }
  return {grid, std::move(v), pr.lim_minus, pr.lim_plus};
}

LineFn random_smooth(const Grid& grid, std::mt19937_64& rng, double bound) {
  const SmoothParams s = draw_smooth(rng);
  const int n = grid.n_half();
  std::vector<double> v(grid.size());
  double sup = std::max(std::abs(s.c0 - s.c1), std::abs(s.c0 + s.c1));
  for (int k = -n; k <= n; ++k) {
    v[static_cast<std::size_t>(k + n)] = s(grid.node(k));
    sup = std::max(sup, std::abs(v[static_cast<std::size_t>(k + n)]));
  }
  const double scale = sup > 0.0 ? bound / sup : 0.0;
  for (double& x : v) x *= scale;
  return {grid, std::move(v), scale * (s.c0 - s.c1), scale * (s.c0 + s.c1)};
}

FnPair random_pair(const Grid& grid, std::mt19937_64& rng, double bound) {
  LineFn a = random_smooth(grid, rng, bound);
  LineFn b = random_smooth(grid, rng, bound);
  return {std::move(a), std::move(b)};
}

SharpFn random_sharp(const Grid& grid, std::mt19937_64& rng, double bound) {
  const SharpFn a = to_sharp(random_smooth(grid, rng, bound));
  const SharpFn b = to_sharp(random_smooth(grid, rng, bound));
  return {grid, std::vector<double>(a.left().begin(), a.left().end()),
          std::vector<double>(b.right().begin(), b.right().end()), a.lim_minus(), b.lim_plus()};
}

SharpFn random_opposite(const Grid& grid, std::mt19937_64& rng, double bound) {
  return j_inv(random_smooth(grid, rng, bound));
}

double estimate_lipschitz(const SharpFn& f) {
  const double h = f.grid().step();
  double l = 0.0;
  for (std::size_t i = 1; i < f.left().size(); ++i) {
    l = std::max(l, std::abs(f.left()[i] - f.left()[i - 1]) / h);
    l = std::max(l, std::abs(f.right()[i] - f.right()[i - 1]) / h);
  }
  return l;
}

double estimate_lipschitz(const LineFn& f) {
  const double h = f.grid().step();
  double l = 0.0;
  for (std::size_t i = 1; i < f.values().size(); ++i) {
    l = std::max(l, std::abs(f.values()[i] - f.values()[i - 1]) / h);
  }
  return l;
}

}  // namespace membranekit
