#include "membranekit/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "membranekit/extensions.hpp"
#include "membranekit/probes.hpp"
#include "membranekit/projections.hpp"

namespace membranekit {

std::vector<double> ConvergenceReport::bounds() const {
  std::vector<double> b;
  if (!k_theory) return b;
  for (int n : n_values) b.push_back(*k_theory / n);
  return b;
}

bool ConvergenceReport::within_envelope(double budget) const {
  if (!k_theory) return false;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (errors[i] > *k_theory / n_values[i] + budget) return false;
  }
  return true;
}

double fit_order(const std::vector<int>& n_values, const std::vector<double>& errors) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < n_values.size() && i < errors.size(); ++i) {
    if (errors[i] > 0.0) {
      x.push_back(std::log(static_cast<double>(n_values[i])));
      y.push_back(std::log(errors[i]));
    }
  }
  if (x.size() < 2) return 0.0;
  const auto m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxx > 0.0 ? -sxy / sxx : 0.0;
}

double rate_constant_so(const MembraneParams& p, double lipschitz) {
  return 2.0 * std::max(p.alpha(), p.beta()) * lipschitz / (p.sum() * p.sum());
}

double rate_constant_os(const MembraneParams& p, double lipschitz) {
  return 2.0 * lipschitz / p.sum();
}

namespace {

void require_increasing(const std::vector<int>& n_values) {
  if (n_values.empty()) throw std::invalid_argument("sweep needs at least one n");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1 || (i > 0 && n_values[i] <= n_values[i - 1])) {
      throw std::invalid_argument("n values must be positive and strictly increasing");
    }
  }
}

ConvergenceReport run(const std::vector<int>& n_values, int threads,
                      const std::function<double(int)>& error_at) {
  require_increasing(n_values);
  ConvergenceReport r;
  r.n_values = n_values;
  r.errors.assign(n_values.size(), 0.0);
  parallel_for(n_values.size(), threads, [&](std::size_t i) { r.errors[i] = error_at(n_values[i]); });
  r.fitted_order = fit_order(r.n_values, r.errors);
  return r;
}

double max_over(const std::vector<double>& ts, const std::function<double(double)>& g) {
  double m = 0.0;
  for (double t : ts) m = std::max(m, g(t));
  return m;
}

}  // namespace

ConvergenceReport sweep_extension(const MembraneParams& p, const LineFn& f,
                                  const std::vector<int>& n_values, const SweepOptions& opt) {
  const FnPair target = extend_skew(p, f);
  const SharpFn fs = to_sharp(f);
  auto r = run(n_values, opt.threads,
               [&](int n) { return (extend_so(p.scaled(n), fs) - target).sup_norm(); });
  r.lipschitz = opt.lipschitz.value_or(estimate_lipschitz(f));
  r.k_theory = rate_constant_so(p, r.lipschitz);
  return r;
}

ConvergenceReport sweep_cosine(const MembraneParams& p, const LineFn& f,
                               const std::vector<int>& n_values, const std::vector<double>& t_grid,
                               const SweepOptions& opt) {
  const FnPair target = extend_skew(p, f);
  const SharpFn fs = to_sharp(f);
  auto r = run(n_values, opt.threads, [&](int n) {
    const FnPair e = extend_so(p.scaled(n), fs);
    return max_over(t_grid, [&](double t) {
      return (restricted_cosine(t, e) - restricted_cosine(t, target)).sup_norm();
    });
  });
  r.lipschitz = opt.lipschitz.value_or(estimate_lipschitz(f));
  r.k_theory = rate_constant_so(p, r.lipschitz);
  return r;
}

ConvergenceReport sweep_divergence(const MembraneParams& p, const SharpFn& f,
                                   const std::vector<int>& n_values, double t,
                                   const SweepOptions& opt) {
  const SharpFn target = restricted_cosine(t, limit_extension_so(p, f));
  auto r = run(n_values, opt.threads, [&](int n) {
    return (restricted_cosine(t, extend_so(p.scaled(n), f)) - target).sup_norm();
  });
  r.lipschitz = opt.lipschitz.value_or(estimate_lipschitz(f));
  return r;
}

ConvergenceReport sweep_semigroup(const MembraneParams& p, const SharpFn& f,
                                  const std::vector<int>& n_values,
                                  const std::vector<double>& t_grid, const SweepOptions& opt) {
  if (t_grid.empty()) throw std::invalid_argument("semigroup sweep needs a nonempty t grid");
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("semigroup sweep needs t > 0");
  }
  require_increasing(n_values);
  const auto& wo = opt.weierstrass;
  const std::size_t nt = t_grid.size();
  // values[i][j] = T_{n_i}(t_j) f
  std::vector<std::vector<SharpFn>> values(n_values.size());
  parallel_for(n_values.size(), opt.threads, [&](std::size_t i) {
    const FnPair e = extend_so(p.scaled(n_values[i]), f);
    for (double t : t_grid) values[i].push_back(restricted_heat(t, e, wo));
  });

  ConvergenceReport r;
  r.n_values = n_values;
  r.lipschitz = opt.lipschitz.value_or(estimate_lipschitz(f));
  const bool continuous = is_continuous(f);
  std::vector<SharpFn> target;
  if (continuous) {
    const FnPair e = extend(Family::skew, p, f);
    for (double t : t_grid) target.push_back(restricted_heat(t, e, wo));
    r.k_theory = rate_constant_so(p, r.lipschitz);
  } else {
    target = values.back();
    for (std::size_t i = 0; i + 1 < n_values.size(); ++i) {
      double d = 0.0;
      for (std::size_t j = 0; j < nt; ++j) {
        d = std::max(d, (values[i + 1][j] - values[i][j]).sup_norm());
      }
      r.cauchy.push_back(d);
    }
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    double e = 0.0;
    for (std::size_t j = 0; j < nt; ++j) e = std::max(e, (values[i][j] - target[j]).sup_norm());
    r.errors.push_back(e);
  }
  r.fitted_order = continuous ? fit_order(r.n_values, r.errors)
                              : fit_order({r.n_values.begin(), r.n_values.end() - 1}, r.cauchy);
  return r;
}

ConvergenceReport sweep_projection(const MembraneParams& p, const FnPair& f,
                                   const std::vector<int>& n_values, const SweepOptions& opt) {
  const FnPair target = project_skew(p, f);
  return run(n_values, opt.threads,
             [&](int n) { return (project_so(p.scaled(n), f) - target).sup_norm(); });
}

ConvergenceReport sweep_weks(const MembraneParams& p, const SharpFn& f,
                             const std::vector<int>& n_values, const std::vector<double>& t_grid,
                             const SweepOptions& opt) {
  const FnPair target = extend_weks(p, f);
  auto r = run(n_values, opt.threads, [&](int n) {
    const FnPair e = extend_os(p.scaled(n), f);
    if (t_grid.empty()) return (e - target).sup_norm();
    return max_over(t_grid, [&](double t) {
      return (restricted_cosine(t, e) - restricted_cosine(t, target)).sup_norm();
    });
  });
  r.lipschitz = opt.lipschitz.value_or(estimate_lipschitz(j_iso(f)));
  r.k_theory = rate_constant_os(p, r.lipschitz);
  return r;
}

namespace {

// h/T [C_0/2 + C_1 + ... + C_{M-1} + C_M/2] with C_m = (g_{k+m} + g_{k-m}) / 2.
std::vector<double> window_mean(const LineFn& g, int k_lo, int k_hi, long m_steps) {
  const long lo = k_lo - m_steps;
  const long hi = k_hi + m_steps;
  std::vector<double> prefix(static_cast<std::size_t>(hi - lo + 2), 0.0);
  for (long k = lo; k <= hi; ++k) {
    const auto i = static_cast<std::size_t>(k - lo);
    prefix[i + 1] = prefix[i] + g.at_lattice(k);
  }
  auto sum = [&](long a, long b) {  // sum of g over lattice [a, b]
    return prefix[static_cast<std::size_t>(b - lo + 1)] - prefix[static_cast<std::size_t>(a - lo)];
  };
  std::vector<double> out;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double c0 = g.at_lattice(k);
    const double cm = 0.5 * (g.at_lattice(k + m_steps) + g.at_lattice(k - m_steps));
    const double all = 0.5 * (sum(k, k + m_steps) + sum(k - m_steps, k));
    out.push_back((all - 0.5 * c0 - 0.5 * cm) / static_cast<double>(m_steps));
  }
  return out;
}

}  // namespace

SharpFn cesaro_mean(Family family, const MembraneParams& p, const SharpFn& f, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("Cesaro mean needs t > 0");
  const long m_steps = std::max(1L, std::lround(t / f.grid().step()));
  const FnPair e = extend(family, p, f);
  const int n = f.grid().n_half();
  return {f.grid(), window_mean(e.f1, -n, 0, m_steps), window_mean(e.f2, 0, n, m_steps),
          f.lim_minus(), f.lim_plus()};
}

double mean_m(const MembraneParams& p, double lim_minus, double lim_plus) {
  return (p.beta() * lim_minus + p.alpha() * lim_plus) / p.sum();
}

TwoSided mean_n(const MembraneParams& p, double lim_minus, double lim_plus) {
  const double left = (p.alpha() * lim_minus - p.beta() * lim_plus) / p.sum();
  return {left, -left};
}

double mirror_check(const MembraneParams& p, const SharpFn& f, const std::vector<double>& t_grid) {
  const LineFn jf = j_iso(f);
  const FnPair e = extend_weks(p, f);
  return max_over(t_grid, [&](double t) {
    const LineFn lhs = j_iso(restricted_cosine(t, e), 1e-6);
    return (lhs - skew_cosine(p.swapped(), t, jf)).sup_norm();
  });
}

}  // namespace membranekit
