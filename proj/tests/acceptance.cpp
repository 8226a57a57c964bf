// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "membranekit/conv.hpp"
#include "membranekit/cosine.hpp"
#include "membranekit/extensions.hpp"
#include "membranekit/limits.hpp"
#include "membranekit/montecarlo.hpp"
#include "membranekit/probes.hpp"
#include "membranekit/projections.hpp"
#include "membranekit/semigroup.hpp"

using namespace membranekit;

namespace {

const MembraneParams kParams(0.2, 0.1);
const Grid kGrid(12.0, 1200);
const std::vector<int> kSweep{1, 2, 5, 10, 20, 50};
constexpr double kRateK = 40.0 / 9.0;

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s C%d %s: %s; %.1f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              budget_s);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool order_ok(double order) { return order >= 0.8 && order <= 1.2; }

double envelope_excess(const ConvergenceReport& r) {
  double worst = -1e300;
  for (std::size_t i = 0; i < r.n_values.size(); ++i) {
    worst = std::max(worst, r.errors[i] - (kRateK / r.n_values[i] + 1e-4));
  }
  return worst;
}

std::vector<double> lattice(double lo, double hi, double step) {
  std::vector<double> t;
  for (int k = static_cast<int>(std::lround(lo / step)); k <= std::lround(hi / step); ++k) t.push_back(k * step);
  return t;
}

Outcome norm_bounds() {
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto ts = lattice(-3.0, 3.0, 0.5);
  double worst = -1e300;
  for (int i = 0; i < 200; ++i) {
    const MembraneParams p(5.0 * (1.0 - u(rng)), 5.0 * (1.0 - u(rng)));
    const SharpFn f = random_sharp(kGrid, rng);
    for (double t : ts) {
      worst = std::max(worst, kelvin_cosine(Family::snapping_out, p, t, f).sup_norm() - 5.0 * f.sup_norm());
    }
  }
  return {worst <= 1e-6, fmt("max(||C f|| - 5||f||) = %.3e over 200 parameter pairs (tol 1e-6)", worst)};
}

Outcome rate_k_over_n() {
  SweepOptions o;
  o.lipschitz = 1.0;
  o.threads = threads();
  const auto r = sweep_extension(kParams, sample_line(probe("tanh"), kGrid), kSweep, o);
  const double ex = envelope_excess(r);
  return {ex <= 0.0 && order_ok(r.fitted_order),
          fmt("max(err - (40/9)/n - 1e-4) = %.3e, err(50) = %.4f, fitted order %.3f (need [0.8, 1.2])", ex,
              r.errors.back(), r.fitted_order)};
}

Outcome cosine_uniform() {
  SweepOptions o;
  o.lipschitz = 1.0;
  o.threads = threads();
  const auto r = sweep_cosine(kParams, sample_line(probe("tanh"), kGrid), kSweep, lattice(-3.0, 3.0, 0.25), o);
  const double ex = envelope_excess(r);
  const auto d = sweep_divergence(kParams, sample_sharp(probe("step"), kGrid), kSweep, 1.0, o);
  const double dmin = *std::min_element(d.errors.begin(), d.errors.end());
  return {ex <= 0.0 && dmin > 0.1,
          fmt("max over t and n of err - (40/9)/n - 1e-4 = %.3e; step probe min error %.3f (need > 0.1)", ex, dmin)};
}

Outcome irregular_semigroup() {
  std::vector<int> n(50);
  for (int i = 0; i < 50; ++i) n[i] = i + 1;
  SweepOptions o;
  o.threads = threads();
  const auto r = sweep_semigroup(kParams, sample_sharp(probe("step"), kGrid), n, {0.5, 1.0, 1.5, 2.0}, o);
  bool monotone = true;
  for (std::size_t i = 1; i < r.cauchy.size(); ++i) monotone = monotone && r.cauchy[i] <= 1.1 * r.cauchy[i - 1];
  const double last = r.cauchy.back();
  return {monotone && last < 5e-3,
          fmt("Cauchy differences %s (10%% slack), |T_50 - T_49| = %.3e (tol 5e-3)",
              monotone ? "monotone" : "not monotone", last)};
}

Outcome projection_algebra() {
  // h = 1e-3 keeps the boundary layers of width 1/(50 gamma_1) resolved
  const Grid g(12.0, 12000);
  std::mt19937_64 rng(77);
  const int scales[] = {1, 2, 5, 10, 20, 50};
  double idem = 0.0, split = 0.0, range = 0.0, comp = 0.0;
  for (int i = 0; i < 100; ++i) {
    const MembraneParams p = kParams.scaled(scales[i % 6]);
    const FnPair f = random_pair(g, rng);
    const FnPair so = project_so(p, f);
    const FnPair sk = project_skew(p, f);
    const FnPair wk = project_weks(p, f);
    idem = std::max({idem, (project_so(p, so) - so).sup_norm(), (project_skew(p, sk) - sk).sup_norm(),
                     (project_weks(p, wk) - wk).sup_norm()});
    split = std::max(split, (sk + wk - f).sup_norm());
    range = std::max({range, range_residual_skew(p, sk), range_residual_weks(p, wk)});
    comp = std::max(comp, complement_os(p, so).sup_norm());
  }
  return {idem <= 1e-6 && split <= 1e-12 && range <= 1e-9 && comp <= 1e-6,
          fmt("idempotency %.2e (1e-6), skew + weks - I %.2e (1e-12), range %.2e (1e-9), complement %.2e (1e-6)",
              idem, split, range, comp)};
}

Outcome projection_convergence() {
  std::mt19937_64 rng(4242);
  SweepOptions o;
  o.threads = threads();
  const auto r = sweep_projection(kParams, random_pair(kGrid, rng), kSweep, o);
  bool decreasing = true;
  for (std::size_t i = 1; i < r.errors.size(); ++i) decreasing = decreasing && r.errors[i] < r.errors[i - 1];
  return {decreasing && order_ok(r.fitted_order),
          fmt("errors %s, err(1) = %.3f, err(50) = %.4f, fitted order %.3f (need [0.8, 1.2])",
              decreasing ? "decreasing" : "not decreasing", r.errors.front(), r.errors.back(), r.fitted_order)};
}

double branch_gap(const SharpFn& f, double left, double right) {
  double gap = 0.0;
  for (double v : f.left()) gap = std::max(gap, std::abs(v - left));
  for (double v : f.right()) gap = std::max(gap, std::abs(v - right));
  return gap;
}

Outcome means() {
  const SharpFn f = sample_sharp(probe("tanh"), kGrid);
  const double m = mean_m(kParams, f.lim_minus(), f.lim_plus());
  const double so = branch_gap(cesaro_mean(Family::snapping_out, kParams, f, 200.0), m, m);
  const SharpFn o = sample_sharp(probe("ov-tanh"), kGrid);
  const auto n = mean_n(kParams, o.lim_minus(), o.lim_plus());
  const double wk = branch_gap(cesaro_mean(Family::weks, kParams, o, 200.0), n.left, n.right);
  return {std::abs(m - 1.0 / 3.0) < 1e-15 && so <= 0.05 && wk <= 0.05,
          fmt("s-o max node gap to M f = 1/3: %.4f; weks max node gap to N f: %.4f (tol 0.05, X = 12)", so, wk)};
}

Outcome mirror() {
  const double gap = mirror_check(kParams, sample_sharp(probe("ov-gauss"), kGrid), {0.5, 1.0, 2.0});
  return {gap <= 1e-6, fmt("gap %.3e (tol 1e-6)", gap)};
}

Outcome semigroup_law() {
  const Grid g(12.0, 4800);
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double t = 2.0 * (1.0 - u(rng));
    const double s = 2.0 * (1.0 - u(rng));
    const SharpFn f = random_sharp(g, rng);
    const SharpFn o = random_opposite(g, rng);
    const LineFn c = random_smooth(g, rng);
    for (Family fam : {Family::snapping_out, Family::complementary, Family::weks}) {
      const SharpFn& x = fam == Family::snapping_out ? f : o;
      const SharpFn lhs = weierstrass(fam, kParams, t + s, x);
      const SharpFn rhs = weierstrass(fam, kParams, t, weierstrass(fam, kParams, s, x));
      worst = std::max(worst, (lhs - rhs).sup_norm());
    }
    worst = std::max(worst, (weierstrass_skew(kParams, t + s, c) -
                             weierstrass_skew(kParams, t, weierstrass_skew(kParams, s, c)))
                                .sup_norm());
  }
  const double heat0 = heat(0.25, sample_line(probe("gauss"), g)).at(0);
  const double herr = std::abs(heat0 - 1.0 / std::sqrt(2.0));
  return {worst <= 1e-6 && herr <= 1e-6,
          fmt("max ||T(t+s) f - T(t) T(s) f|| = %.3e (tol 1e-6); |heat(0.25) e^{-x^2} (0) - 1/sqrt2| = %.3e (tol 1e-6)",
              worst, herr)};
}

SharpFn sample_branches(const Grid& g, const std::function<double(double)>& l,
                        const std::function<double(double)>& r) {
  const int n = g.n_half();
  std::vector<double> lv(n + 1), rv(n + 1);
  for (int k = -n; k <= 0; ++k) lv[k + n] = l(g.node(k));
  for (int k = 0; k <= n; ++k) rv[k] = r(g.node(k));
  return {g, lv, rv, 0.0, 0.0};
}

Outcome residual_orders() {
  const double a = kParams.alpha(), b = kParams.beta();
  const double u0 = 0.3, v0 = 1.1, u1 = a * (v0 - u0), v1 = b * (v0 - u0);
  const double sa = 0.5 * a, sb = 0.5 * b, sc = 0.5;  // b sa = a sb
  const double oa = 0.7, ob = -0.4, ocr = 1.0 + (a * oa + b * ob) / 2.0, ocl = -ocr;
  auto gauss = [](double x) { return std::exp(-x * x); };

  std::vector<double> e_so, e_sk, e_os;
  std::vector<double> hs;
  for (int n : {600, 1200, 2400}) {
    const Grid g(12.0, n);
    hs.push_back(g.step());
    const SharpFn so = sample_branches(
        g, [&](double x) { return (u0 + u1 * x) * gauss(x); }, [&](double x) { return (v0 + v1 * x) * gauss(x); });
    const SharpFn sk = sample_branches(
        g, [&](double x) { return (1 + sa * x + sc * x * x) * gauss(x); },
        [&](double x) { return (1 + sb * x + sc * x * x) * gauss(x); });
    const SharpFn os = sample_branches(
        g, [&](double x) { return (-1 + oa * x + ocl * x * x) * gauss(x); },
        [&](double x) { return (1 + ob * x + ocr * x * x) * gauss(x); });
    auto mx = [](Residuals r) { return std::max(std::abs(r.r1), std::abs(r.r2)); };
    e_so.push_back(mx(domain_residual_so(kParams, so)));
    e_sk.push_back(mx(domain_residual_skew(kParams, to_line(sk))));
    e_os.push_back(mx(domain_residual_os(kParams, os)));
  }
  double min_order = 1e300, max_c = 0.0;
  for (const auto* e : {&e_so, &e_sk, &e_os}) {
    for (std::size_t i = 1; i < e->size(); ++i) min_order = std::min(min_order, std::log2((*e)[i - 1] / (*e)[i]));
    for (std::size_t i = 0; i < e->size(); ++i) max_c = std::max(max_c, (*e)[i] / (hs[i] * hs[i]));
  }
  return {min_order >= 1.8,
          fmt("min observed order %.3f (need >= 1.8); residual / h^2 <= %.3f; finest residuals %.1e %.1e %.1e",
              min_order, max_c, e_so.back(), e_sk.back(), e_os.back())};
}

Outcome monte_carlo() {
  PathConfig cfg;
  cfg.n_paths = 200000;
  cfg.dt = 1e-3;
  cfg.threads = threads();
  cfg.seed = 12345;
  const LineFn th = sample_line(probe("tanh"), kGrid);
  const auto sk = simulate_skew(kParams, cfg, 1.0, th);
  const double sk_ref = weierstrass_skew(kParams, 1.0, th).at(0);
  cfg.seed = 54321;
  cfg.x0 = -1.0;
  const SharpFn st = sample_sharp(probe("step"), kGrid);
  const auto sn = simulate_snapping(kParams, cfg, 1.0, st);
  const double sn_ref = weierstrass(Family::snapping_out, kParams, 1.0, st)(-1.0);
  const double d1 = std::abs(sk.mean - sk_ref), d2 = std::abs(sn.mean - sn_ref);
  return {d1 <= 3 * sk.std_error + 0.01 && d2 <= 3 * sn.std_error + 0.01,
          fmt("skew %.5f +- %.5f vs %.5f; snapping %.5f +- %.5f vs %.5f (budget 3 se + 0.01)", sk.mean, sk.std_error,
              sk_ref, sn.mean, sn.std_error, sn_ref)};
}

Outcome dirac_rate() {
  const LineFn f = sample_line(probe("tanh"), kGrid);
  double worst = -1e300;
  std::string errs;
  for (int n : {1, 10, 100}) {
    const double e = (conv::dirac_left(n, 1.0, f) - f).sup_norm();
    worst = std::max(worst, e - (1.0 / n + 1e-4));
    errs += fmt(" %.6f", e);
  }
  return {worst <= 0.0, fmt("errors at na = 1, 10, 100:%s; max(err - 1/(na) - 1e-4) = %.3e", errs.c_str(), worst)};
}

}  // namespace

int main() {
  criterion(1, "norm bound ||C(t)|| <= 5", 60, norm_bounds);
  criterion(2, "K/n extension rate", 30, rate_k_over_n);
  criterion(3, "cosine convergence uniform in t", 120, cosine_uniform);
  criterion(4, "semigroup convergence for a jump", 180, irregular_semigroup);
  criterion(5, "projection algebra", 60, projection_algebra);
  criterion(6, "projection convergence", 60, projection_convergence);
  criterion(7, "Cesaro means", 120, means);
  criterion(8, "mirror identity", 30, mirror);
  criterion(9, "semigroup law and heat closed form", 60, semigroup_law);
  criterion(10, "transmission residual order", 60, residual_orders);
  criterion(11, "Monte-Carlo cross-validation", 300, monte_carlo);
  criterion(12, "Dirac sequence rate", 10, dirac_rate);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
