#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "membranekit/montecarlo.hpp"
#include "membranekit/probes.hpp"
#include "membranekit/semigroup.hpp"

using namespace membranekit;

namespace {

const Grid grid(12.0, 1200);

}  // namespace

TEST_CASE("symmetric skew walk is Brownian motion") {
  const MembraneParams p(1.0, 1.0);
  PathConfig cfg;
  cfg.n_paths = 40000;
  cfg.dt = 1e-3;
  cfg.seed = 17;
  cfg.threads = 4;
  const LineFn f = sample_line(probe("gauss"), grid);
  const auto e = simulate_skew(p, cfg, 0.5, f);
  const double exact = 1.0 / std::sqrt(3.0);  // e^{-x^2} under N(0, 1) at 0
  CHECK(std::abs(e.mean - exact) < 4 * e.std_error + 2e-3);
  CHECK(e.n_paths == 40000);
}

TEST_CASE("estimates are reproducible and thread independent") {
  const MembraneParams p(0.2, 0.1);
  PathConfig cfg;
  cfg.n_paths = 10000;
  cfg.seed = 5;
  const LineFn f = sample_line(probe("tanh"), grid);
  const auto a = simulate_skew(p, cfg, 0.3, f);
  cfg.threads = 3;
  const auto b = simulate_skew(p, cfg, 0.3, f);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  cfg.antithetic = true;
  const auto c = simulate_skew(p, cfg, 0.3, f);
  CHECK(c.n_paths == 10000);
}

TEST_CASE("skew walk against the skew semigroup") {
  const MembraneParams p(0.2, 0.1);
  PathConfig cfg;
  cfg.n_paths = 40000;
  cfg.seed = 3;
  cfg.threads = 4;
  const LineFn f = sample_line(probe("tanh"), grid);
  const double ref = weierstrass_skew(p, 0.5, f).at(0);
  const auto e = simulate_skew(p, cfg, 0.5, f);
  CHECK(std::abs(e.mean - ref) < 4 * e.std_error + 2e-3);
}

TEST_CASE("snapping walk against the snapping-out semigroup") {
  const MembraneParams p(1.0, 0.5);
  PathConfig cfg;
  cfg.n_paths = 40000;
  cfg.seed = 8;
  cfg.threads = 4;
  cfg.x0 = -0.3;
  const SharpFn f = sample_sharp(probe("step"), grid);
  const double ref = weierstrass(Family::snapping_out, p, 0.5, f)(-0.3);
  const auto e = simulate_snapping(p, cfg, 0.5, f);
  CHECK(std::abs(e.mean - ref) < 4 * e.std_error + 5e-3);
}

TEST_CASE("snapping walk configuration errors") {
  const SharpFn f = sample_sharp(probe("step"), grid);
  PathConfig cfg;
  cfg.n_paths = 10;
  CHECK_THROWS_AS(simulate_snapping(MembraneParams(0.2, 0.1), cfg, 0.1, f), std::invalid_argument);
  cfg.side = Side::left;
  CHECK_NOTHROW(simulate_snapping(MembraneParams(0.2, 0.1), cfg, 0.1, f));
  cfg.dt = 0.5;
  CHECK_THROWS_AS(simulate_snapping(MembraneParams(5.0, 0.1), cfg, 1.0, f), std::invalid_argument);
}

TEST_CASE("a single path reports the trivial error bound") {
  PathConfig cfg;
  cfg.n_paths = 1;
  const auto e = simulate_skew(MembraneParams(0.2, 0.1), cfg, 0.1, sample_line(probe("tanh"), grid));
  CHECK(std::isfinite(e.std_error));
}
