#include "membranekit/semigroup.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace membranekit {

QuadratureRule QuadratureRule::gauss_hermite(int m) {
  if (m < 1) throw std::invalid_argument("Gauss-Hermite rule needs m >= 1");
  // Newton iteration on orthonormal Hermite functions with the usual
  // asymptotic starting guesses for the largest roots.
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const auto n = static_cast<std::size_t>(m);
  std::vector<double> x(n);
  std::vector<double> w(n);
  double z = 0.0;
  double pp = 0.0;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(m), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * m) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;  // total == sqrt(pi) up to rounding
  if (m % 2 == 1) x[n / 2] = 0.0;
  return {std::move(x), std::move(w)};
}

std::vector<double> lattice_heat_weights(double t, double h, double cutoff) {
  if (!(t > 0.0) || !(h > 0.0)) throw std::invalid_argument("heat weights need t > 0 and h > 0");
  const double sigma = std::sqrt(2.0 * t);
  const auto big_m = static_cast<std::size_t>(std::ceil(cutoff * sigma / h)) + 1;
  std::vector<double> w(big_m + 1);
  const double inv_norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  auto density = [&](double s) { return inv_norm * std::exp(-0.5 * (s / sigma) * (s / sigma)); };

  if (sigma >= 2.0 * h) {
    // 8-point Gauss-Legendre on each half of the hat; the density is smooth
    // on the scale of a cell so this is accurate to rounding.
    static constexpr std::array<double, 4> gl_x{0.1834346424956498, 0.5255324099163290,
                                                0.7966664774136267, 0.9602898564975363};
    static constexpr std::array<double, 4> gl_w{0.3626837833783620, 0.3137066458778873,
                                                0.2223810344533745, 0.1012285362903763};
    for (std::size_t m = 0; m <= big_m; ++m) {
      const double c = static_cast<double>(m) * h;
      double acc = 0.0;
      for (int side = -1; side <= 1; side += 2) {
        // half cell [c, c + side h], hat weight 1 - |s - c| / h
        for (std::size_t q = 0; q < gl_x.size(); ++q) {
          for (double sgn : {-1.0, 1.0}) {
            const double u = 0.5 * (1.0 + sgn * gl_x[q]);  // in (0, 1)
            const double s = c + side * u * h;
            acc += 0.5 * gl_w[q] * (1.0 - u) * density(s);
          }
        }
      }
      w[m] = acc * h;
    }
  } else {
    // Second difference of F(x) = int (x - s)_+ rho(s) ds.
    auto ramp = [&](double x) {
      const double cdf = 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2));
      return x * cdf + sigma * sigma * density(x);
    };
    for (std::size_t m = 0; m <= big_m; ++m) {
      const double c = static_cast<double>(m) * h;
      w[m] = (ramp(c + h) - 2.0 * ramp(c) + ramp(c - h)) / h;
    }
  }
  double total = w[0];
  for (std::size_t m = 1; m <= big_m; ++m) total += 2.0 * w[m];
  for (double& v : w) v /= total;
  return w;
}

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("semigroup needs t >= 0");
}

// sum_m w_|m| g(k + m) for k in [k_lo, k_hi].
std::vector<double> lattice_smooth(const std::vector<double>& w, const LineFn& g, int k_lo,
                                   int k_hi) {
  const long big_m = static_cast<long>(w.size()) - 1;
  const long lo = k_lo - big_m;
  const long hi = k_hi + big_m;
  std::vector<double> samples(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) samples[static_cast<std::size_t>(k - lo)] = g.at_lattice(k);
  std::vector<double> out(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (int k = k_lo; k <= k_hi; ++k) {
    const std::size_t centre = static_cast<std::size_t>(k - lo);
    double acc = w[0] * samples[centre];
    for (std::size_t m = 1; m < w.size(); ++m) {
      acc += w[m] * (samples[centre + m] + samples[centre - m]);
    }
    out[static_cast<std::size_t>(k - k_lo)] = acc;
  }
  return out;
}

}  // namespace

LineFn heat(double t, const LineFn& f, const WeierstrassOptions& opts) {
  require_time(t);
  if (t == 0.0) return f;
  const int n = f.grid().n_half();
  if (opts.scheme == WeierstrassScheme::gauss_hermite) {
    const auto rule = QuadratureRule::gauss_hermite(opts.hermite_nodes);
    std::vector<double> acc(f.grid().size(), 0.0);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const LineFn c = basic_cosine(2.0 * std::sqrt(t) * rule.nodes[q], f);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += rule.weights[q] * c.values()[i];
    }
    return {f.grid(), std::move(acc), f.lim_minus(), f.lim_plus()};
  }
  const auto w = lattice_heat_weights(t, f.grid().step(), opts.cutoff);
  return {f.grid(), lattice_smooth(w, f, -n, n), f.lim_minus(), f.lim_plus()};
}

SharpFn restricted_heat(double t, const FnPair& extension, const WeierstrassOptions& opts) {
  require_time(t);
  if (t == 0.0) return restrict(extension);
  const int n = extension.grid().n_half();
  if (opts.scheme == WeierstrassScheme::gauss_hermite) {
    const auto rule = QuadratureRule::gauss_hermite(opts.hermite_nodes);
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<double> left(size, 0.0);
    std::vector<double> right(size, 0.0);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const SharpFn c = restricted_cosine(2.0 * std::sqrt(t) * rule.nodes[q], extension);
      for (std::size_t i = 0; i < size; ++i) {
        left[i] += rule.weights[q] * c.left()[i];
        right[i] += rule.weights[q] * c.right()[i];
      }
    }
    return {extension.grid(), std::move(left), std::move(right), extension.f1.lim_minus(),
            extension.f2.lim_plus()};
  }
  const auto w = lattice_heat_weights(t, extension.grid().step(), opts.cutoff);
  return {extension.grid(), lattice_smooth(w, extension.f1, -n, 0),
          lattice_smooth(w, extension.f2, 0, n), extension.f1.lim_minus(),
          extension.f2.lim_plus()};
}

SharpFn weierstrass(Family family, const MembraneParams& p, double t, const SharpFn& f,
                    const WeierstrassOptions& opts) {
  require_time(t);
  if (t == 0.0) return f;
  return restricted_heat(t, extend(family, p, f), opts);
}

LineFn weierstrass_skew(const MembraneParams& p, double t, const LineFn& f,
                        const WeierstrassOptions& opts) {
  const SharpFn r = weierstrass(Family::skew, p, t, to_sharp(f), opts);
  std::vector<double> v(r.left().begin(), r.left().end());
  v.back() = 0.5 * (r.zero_minus() + r.zero_plus());
  v.insert(v.end(), r.right().begin() + 1, r.right().end());
  return {f.grid(), std::move(v), r.lim_minus(), r.lim_plus()};
}

BoundaryDerivatives boundary_derivatives(const SharpFn& f) {
  if (f.grid().n_half() < 3) throw std::invalid_argument("stencils need n_half >= 3");
  const double h = f.grid().step();
  const double p0 = f.right_at(0), p1 = f.right_at(1), p2 = f.right_at(2), p3 = f.right_at(3);
  const double m0 = f.left_at(0), m1 = f.left_at(-1), m2 = f.left_at(-2), m3 = f.left_at(-3);
  return {
      (3.0 * m0 - 4.0 * m1 + m2) / (2.0 * h),
      (-3.0 * p0 + 4.0 * p1 - p2) / (2.0 * h),
      (2.0 * m0 - 5.0 * m1 + 4.0 * m2 - m3) / (h * h),
      (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) / (h * h),
  };
}

Residuals domain_residual_so(const MembraneParams& p, const SharpFn& f) {
  const auto d = boundary_derivatives(f);
  const double j = jump(f);
  return {d.d1_minus - p.alpha() * j, d.d1_plus - p.beta() * j};
}

Residuals domain_residual_skew(const MembraneParams& p, const LineFn& f) {
  const auto d = boundary_derivatives(to_sharp(f));
  return {d.d2_plus - d.d2_minus, p.beta() * d.d1_minus - p.alpha() * d.d1_plus};
}

Residuals domain_residual_os(const MembraneParams& p, const SharpFn& f) {
  const auto d = boundary_derivatives(f);
  return {d.d2_plus - p.alpha() * d.d1_minus - p.beta() * d.d1_plus, d.d2_plus + d.d2_minus};
}

}  // namespace membranekit
