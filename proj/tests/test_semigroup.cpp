#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "membranekit/cosine.hpp"
#include "membranekit/probes.hpp"
#include "membranekit/semigroup.hpp"

using namespace membranekit;

namespace {

const MembraneParams p(0.2, 0.1);

// e^{-x^2} under N(0, 2t)
double heat_gauss(double t, double x) { return std::exp(-x * x / (1 + 4 * t)) / std::sqrt(1 + 4 * t); }

}  // namespace

TEST_CASE("Gauss-Hermite rule") {
  const auto r2 = QuadratureRule::gauss_hermite(2);
  REQUIRE(r2.size() == 2);
  CHECK(std::abs(r2.nodes[0]) == doctest::Approx(1 / std::numbers::sqrt2));
  CHECK(r2.weights[0] == doctest::Approx(0.5));
  for (int m : {5, 20, 40, 80}) {
    const auto r = QuadratureRule::gauss_hermite(m);
    CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    // E u^4 for u ~ N(0, 1/2) is 3/4
    double m4 = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) m4 += r.weights[i] * std::pow(r.nodes[i], 4);
    CHECK(m4 == doctest::Approx(0.75).epsilon(1e-12));
  }
}

TEST_CASE("lattice heat weights") {
  const auto w = lattice_heat_weights(0.5, 0.01);
  double total = w[0];
  double var = 0.0;
  for (std::size_t m = 1; m < w.size(); ++m) {
    total += 2 * w[m];
    var += 2 * w[m] * (m * 0.01) * (m * 0.01);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  // hat smoothing adds h^2 / 6 to the variance 2t
  CHECK(var == doctest::Approx(1.0 + 0.01 * 0.01 / 6).epsilon(1e-10));
}

TEST_CASE("heat semigroup against the Gaussian closed form") {
  const Grid g(12.0, 1200);
  const LineFn f = sample_line(probe("gauss"), g);
  for (double t : {0.25, 1.0, 3.0}) {
    const LineFn u = heat(t, f);
    WeierstrassOptions gh;
    gh.scheme = WeierstrassScheme::gauss_hermite;
    gh.hermite_nodes = 80;
    const LineFn v = heat(t, f, gh);
    for (int k : {0, 50, 300}) {
      const double x = g.node(k);
      CHECK(std::abs(u.at(k) - heat_gauss(t, x)) < 1e-5);
      CHECK(std::abs(v.at(k) - heat_gauss(t, x)) < 1e-5);
    }
  }
  CHECK((heat(0.0, f) - f).sup_norm() == 0.0);
  CHECK_THROWS(heat(-1.0, f));
}

TEST_CASE("semigroups: identity at 0, domain errors, contraction") {
  const Grid g(12.0, 1200);
  std::mt19937_64 rng(2);
  const SharpFn f = random_sharp(g, rng);
  CHECK((weierstrass(Family::snapping_out, p, 0.0, f) - f).sup_norm() == 0.0);
  CHECK_THROWS(weierstrass(Family::snapping_out, p, -0.1, f));
  CHECK_THROWS_AS(weierstrass(Family::skew, p, 1.0, f), std::domain_error);
  for (double t : {0.1, 1.0, 5.0}) {
    CHECK(weierstrass(Family::snapping_out, p, t, f).sup_norm() <= f.sup_norm() + 1e-9);
  }
  const SharpFn o = random_opposite(g, rng);
  for (double t : {0.1, 1.0, 5.0}) {
    CHECK(weierstrass(Family::complementary, p, t, o).sup_norm() <= o.sup_norm() + 1e-9);
    CHECK(weierstrass(Family::weks, p, t, o).sup_norm() <= o.sup_norm() + 1e-9);
  }
}

TEST_CASE("semigroup outputs satisfy the boundary conditions") {
  const Grid g(12.0, 4800);
  const double t = 0.5;
  const SharpFn so = weierstrass(Family::snapping_out, p, t, sample_sharp(probe("step"), g));
  const auto r = domain_residual_so(p, so);
  CHECK(std::abs(r.r1) < 1e-3);
  CHECK(std::abs(r.r2) < 1e-3);
  const LineFn sk = weierstrass_skew(p, t, sample_line(probe("tanh"), g));
  const auto rs = domain_residual_skew(p, sk);
  CHECK(std::abs(rs.r1) < 1e-3);
  CHECK(std::abs(rs.r2) < 1e-3);
  const SharpFn os = weierstrass(Family::complementary, p, t, sample_sharp(probe("ov-gauss"), g));
  const auto ro = domain_residual_os(p, os);
  CHECK(std::abs(ro.r1) < 1e-3);
  CHECK(std::abs(ro.r2) < 1e-3);
}

TEST_CASE("residual stencils on closed-form domain members") {
  // (u0 + u1 x) e^{-x^2} | (v0 + v1 x) e^{-x^2} with u1 = alpha [f], v1 = beta [f]
  const double u0 = 0.3, v0 = 1.1;
  const double u1 = p.alpha() * (v0 - u0), v1 = p.beta() * (v0 - u0);
  double prev = 1e9;
  for (int n : {600, 1200, 2400}) {
    const Grid g(12.0, n);
    std::vector<double> l(g.size() / 2 + 1), r(g.size() / 2 + 1);
    for (int k = -n; k <= 0; ++k) {
      const double x = g.node(k);
      l[k + n] = (u0 + u1 * x) * std::exp(-x * x);
    }
    for (int k = 0; k <= n; ++k) {
      const double x = g.node(k);
      r[k] = (v0 + v1 * x) * std::exp(-x * x);
    }
    const auto res = domain_residual_so(p, SharpFn(g, l, r, 0.0, 0.0));
    const double e = std::max(std::abs(res.r1), std::abs(res.r2));
    CHECK(e < prev / 3.5);  // second order
    prev = e;
  }
  CHECK_THROWS(boundary_derivatives(SharpFn(Grid(1.0, 1), {0, 0, 0}, {0, 0, 0}, 0, 0)));
}
