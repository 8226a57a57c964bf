#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "membranekit/extensions.hpp"
#include "membranekit/limits.hpp"
#include "membranekit/parallel.hpp"
#include "membranekit/probes.hpp"

using namespace membranekit;

namespace {

const Grid grid(12.0, 1200);
const MembraneParams p(0.2, 0.1);

}  // namespace

TEST_CASE("order fit and envelopes") {
  const std::vector<int> n{1, 2, 4, 8};
  CHECK(fit_order(n, {1.0, 0.5, 0.25, 0.125}) == doctest::Approx(1.0));
  CHECK(fit_order(n, {1.0, 0.25, 0.0625, 0.015625}) == doctest::Approx(2.0));
  ConvergenceReport r;
  r.n_values = n;
  r.errors = {0.9, 0.505, 0.2, 0.1};
  CHECK(!r.within_envelope(0.0));
  r.k_theory = 1.0;
  CHECK(r.bounds()[3] == doctest::Approx(0.125));
  CHECK(!r.within_envelope(0.0));
  CHECK(r.within_envelope(0.01));
}

TEST_CASE("rate constants and means") {
  CHECK(rate_constant_so(p, 1.0) == doctest::Approx(2 * 0.2 / 0.09));
  CHECK(rate_constant_os(p, 1.0) == doctest::Approx(2 / 0.3));
  CHECK(mean_m(p, 0.0, 1.0) == doctest::Approx(2.0 / 3.0));
  const auto nm = mean_n(p, 1.0, 1.0);
  CHECK(nm.left == doctest::Approx(1.0 / 3.0));
  CHECK(nm.right == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 5) throw std::runtime_error("x");
  }));
}

TEST_CASE("extension sweep decreases and is thread independent") {
  const LineFn f = sample_line(probe("tanh"), grid);
  SweepOptions one;
  one.lipschitz = 1.0;
  SweepOptions four = one;
  four.threads = 4;
  const std::vector<int> n{1, 2, 4, 8, 16};
  const auto a = sweep_extension(p, f, n, one);
  const auto b = sweep_extension(p, f, n, four);
  CHECK(a.errors == b.errors);
  for (std::size_t i = 1; i < n.size(); ++i) CHECK(a.errors[i] < a.errors[i - 1]);
  REQUIRE(a.k_theory);
  CHECK(*a.k_theory == doctest::Approx(rate_constant_so(p, 1.0)));
}

TEST_CASE("cosine sweep stays within K / n; a jump does not converge") {
  const LineFn f = sample_line(probe("tanh"), grid);
  SweepOptions o;
  o.lipschitz = 1.0;
  const auto r = sweep_cosine(p, f, {1, 2, 5, 10}, {0.5, 1.0, 2.0}, o);
  CHECK(r.within_envelope(1e-4));
  const auto d = sweep_divergence(p, sample_sharp(probe("step"), grid), {1, 10, 100}, 1.0, o);
  CHECK(d.errors.back() > 0.1);
}

TEST_CASE("semigroup sweep for a jump records Cauchy differences") {
  const auto r = sweep_semigroup(p, sample_sharp(probe("step"), grid), {1, 2, 4, 8}, {1.0});
  REQUIRE(r.cauchy.size() == 3);
  CHECK(r.cauchy[2] < r.cauchy[0]);
  CHECK(r.errors.back() == 0.0);
}

TEST_CASE("Cesaro mean of a constant is the constant") {
  const SharpFn c = sample_sharp(probe("const"), grid);
  const SharpFn m = cesaro_mean(Family::snapping_out, p, c, 5.0);
  CHECK((m - c).sup_norm() < 1e-12);
}

TEST_CASE("Cesaro means at fixed x approach M f at rate 1 / T") {
  const SharpFn f = sample_sharp(probe("tanh"), grid);
  const double target = mean_m(p, -1.0, 1.0);
  const SharpFn a = cesaro_mean(Family::snapping_out, p, f, 400.0);
  const SharpFn b = cesaro_mean(Family::snapping_out, p, f, 800.0);
  for (double x : {-3.0, 0.0, 3.0}) {
    const double ea = std::abs(a(x) - target);
    const double eb = std::abs(b(x) - target);
    CHECK(eb * 800.0 < 10.0);  // the constant grows with |x|
    CHECK(ea / eb == doctest::Approx(2.0).epsilon(0.02));
  }
  CHECK(std::abs(b.zero_minus() - target) < 0.01);
}

TEST_CASE("mirror identity") {
  CHECK(mirror_check(p, sample_sharp(probe("ov-gauss"), grid), {0.5, 1.0, 2.0}) < 1e-12);
  CHECK(mirror_check(p, sample_sharp(probe("ov-tanh"), grid), {0.5, 1.0}) < 1e-12);
}
