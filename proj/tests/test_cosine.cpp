#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "membranekit/cosine.hpp"
#include "membranekit/extensions.hpp"
#include "membranekit/probes.hpp"

using namespace membranekit;

namespace {

const Grid grid(12.0, 1200);
const MembraneParams p(0.2, 0.1);

double sup_diff(const SharpFn& a, const SharpFn& b) { return (a - b).sup_norm(); }

}  // namespace

TEST_CASE("basic cosine is the d'Alembert average") {
  const LineFn f = sample_line(probe("tanh"), grid);
  for (double t : {0.0, 0.5, 1.234, 20.0}) {
    const LineFn c = basic_cosine(t, f);
    for (int k : {-1200, -37, 0, 5, 1200}) {
      const double x = grid.node(k);
      const double exact = 0.5 * (std::tanh(x + t) + std::tanh(x - t));
      CHECK(c.at(k) == doctest::Approx(exact).epsilon(1e-4));
    }
  }
  // on lattice shifts only the grid samples are read
  const LineFn c = basic_cosine(0.5, f);
  CHECK(c.at(0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("cosine families at t = 0 reproduce f") {
  std::mt19937_64 rng(7);
  const SharpFn f = random_sharp(grid, rng);
  CHECK(sup_diff(kelvin_cosine(Family::snapping_out, p, 0.0, f), f) < 1e-15);
  const SharpFn o = random_opposite(grid, rng);
  CHECK(sup_diff(kelvin_cosine(Family::complementary, p, 0.0, o), o) < 1e-15);
  CHECK(sup_diff(kelvin_cosine(Family::weks, p, 0.0, o), o) < 1e-15);
}

TEST_CASE("cosine functional equation 2 C(t) C(s) = C(t + s) + C(t - s)") {
  std::mt19937_64 rng(11);
  const SharpFn f = random_sharp(grid, rng);
  const SharpFn o = random_opposite(grid, rng);
  const double h = grid.step();
  for (Family fam : {Family::snapping_out, Family::complementary, Family::weks}) {
    const SharpFn& g = fam == Family::snapping_out ? f : o;
    for (auto [t, s] : {std::pair{50 * h, 30 * h}, std::pair{120 * h, 170 * h}}) {
      const SharpFn lhs = 2.0 * kelvin_cosine(fam, p, t, kelvin_cosine(fam, p, s, g));
      const SharpFn rhs = kelvin_cosine(fam, p, t + s, g) + kelvin_cosine(fam, p, std::abs(t - s), g);
      CHECK(sup_diff(lhs, rhs) < 1e-4);
    }
  }
}

TEST_CASE("skew cosine preserves continuity and matches the Kelvin form") {
  const LineFn f = sample_line(probe("gauss-shift"), grid);
  const LineFn c = skew_cosine(p, 0.7, f);
  const SharpFn k = kelvin_cosine(Family::skew, p, 0.7, to_sharp(f));
  CHECK((to_sharp(c) - k).sup_norm() < 1e-12);
  // closed form at x = 0: ((2 alpha) f(t) + (2 beta) f(-t)) / (2 (alpha + beta)) on lattice t
  const double t = 0.7;
  const double g = std::exp(-(t - 1) * (t - 1));
  const double gm = std::exp(-(t + 1) * (t + 1));
  CHECK(c.at(0) == doctest::Approx((p.alpha() * g + p.beta() * gm) / p.sum()).epsilon(1e-12));
}

TEST_CASE("norm bounds") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const SharpFn f = random_sharp(grid, rng);
    for (double t : {0.3, 2.0, 7.5}) {
      // ||E^{s-o}|| <= 1 + 4 max(alpha, beta) / (alpha + beta)
      const double bound = 1.0 + 4.0 * std::max(p.alpha(), p.beta()) / p.sum();
      CHECK(kelvin_cosine(Family::snapping_out, p, t, f).sup_norm() <= bound * f.sup_norm() + 1e-12);
    }
  }
}

TEST_CASE("family domains are enforced") {
  const SharpFn step = sample_sharp(probe("step"), grid);
  CHECK_THROWS_AS(kelvin_cosine(Family::skew, p, 1.0, step), std::domain_error);
  CHECK_THROWS_AS(kelvin_cosine(Family::complementary, p, 1.0, step), std::domain_error);
  CHECK_THROWS_AS(kelvin_cosine(Family::weks, p, 1.0, step), std::domain_error);
  CHECK_NOTHROW(kelvin_cosine(Family::snapping_out, p, 1.0, step));
  CHECK(family_from_string(to_string(Family::weks)) == Family::weks);
  CHECK_THROWS(family_from_string("nope"));
}

TEST_CASE("generator quotient approaches f''") {
  const Grid g(12.0, 2400);
  const LineFn f = sample_line(probe("gauss"), g);
  const LineFn q = generator_quotient(0.05, f);
  for (int k : {0, 100, 240}) {
    const double x = g.node(k);
    const double f2 = (4 * x * x - 2) * std::exp(-x * x);
    CHECK(q.at(k) == doctest::Approx(f2).epsilon(5e-3).scale(1.0));
  }
}
