#include "membranekit/conv.hpp"

#include <cmath>
#include <stdexcept>

namespace membranekit::conv {

namespace {

// (1 - e^{-z}) / z
double phi1(double z) { return -std::expm1(-z) / z; }

// (1 - e^{-z} (1 + z)) / z^2, series below 0.05 where the closed form cancels.
double phi2(double z) {
  if (z < 0.05) {
    // sum_{k>=2} (-1)^k (k-1)/k! z^{k-2}
    double term_fact = 2.0;  // k!
    double zp = 1.0;
    double s = 0.0;
    for (int k = 2; k <= 12; ++k) {
      if (k > 2) {
        term_fact *= k;
        zp *= -z;
      }
      s += (k - 1) / term_fact * zp;
    }
    return s;
  }
  return (phi1(z) - std::exp(-z)) / z;
}

void require_rate(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("exponential kernel needs a finite rate a > 0");
  }
}

double factorial(int p) {
  double f = 1.0;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

// int_d^inf e^{-a (u - d)} u^p e^{-r u} du = e^{-r d} sum_k coef_k d^k, b = a + r.
std::vector<ExpTerm> incoming_terms(double a, const ExpTerm& t) {
  const double b = a + t.rate;
  std::vector<ExpTerm> out;
  for (int k = 0; k <= t.power; ++k) {
    const double c = factorial(t.power) / (factorial(k) * std::pow(b, t.power - k + 1));
    out.push_back({t.amplitude * c, t.rate, k});
  }
  return out;
}

// Value at the grid edge of the integral over the tail side, integrating
// towards the grid: int_0^inf e^{-a d} tail(d) dd.
double incoming_value(double a, const Tail& in) {
  double v = in.limit / a;
  for (const auto& t : in.terms) {
    v += t.amplitude * factorial(t.power) / std::pow(a + t.rate, t.power + 1);
  }
  return v;
}

// Tail of the integral on the side the integral comes from.
Tail incoming_tail(double a, const Tail& in) {
  Tail out{in.limit / a};
  for (const auto& t : in.terms) out += Tail{0.0, incoming_terms(a, t)};
  return out;
}

// Tail of the integral continued past the grid edge where it has value g_edge:
// g(X + d) = e^{-a d} g_edge + int_0^d e^{-a (d - u)} in(u) du.
Tail outgoing_tail(double a, double g_edge, const Tail& in) {
  Tail out{in.limit / a};
  double own = g_edge - in.limit / a;
  for (const auto& t : in.terms) {
    const int p = t.power;
    const double c = a - t.rate;
    if (std::abs(c) <= 1e-9 * a) {
      // resonant: int_0^d u^p du = d^{p+1} / (p + 1)
      out += Tail{0.0, {{t.amplitude / (p + 1), a, p + 1}}};
      continue;
    }
    // e^{-a d} int_0^d u^p e^{c u} du
    //   = e^{-r d} sum_k (-1)^{p-k} p! / (k! c^{p-k+1}) d^k - (-1)^p p! / c^{p+1} e^{-a d}
    std::vector<ExpTerm> part;
    for (int k = 0; k <= p; ++k) {
      const double sign = (p - k) % 2 == 0 ? 1.0 : -1.0;
      part.push_back(
          {t.amplitude * sign * factorial(p) / (factorial(k) * std::pow(c, p - k + 1)), t.rate, k});
    }
    out += Tail{0.0, std::move(part)};
    own -= t.amplitude * (p % 2 == 0 ? 1.0 : -1.0) * factorial(p) / std::pow(c, p + 1);
  }
  out += Tail{0.0, {{own, a}}};
  return out;
}

}  // namespace

HalfLineFn::HalfLineFn(Grid g, std::vector<double> v, Tail t)
    : grid(g), values(std::move(v)), tail(std::move(t)) {
  if (values.size() != static_cast<std::size_t>(grid.n_half()) + 1) {
    throw std::invalid_argument("half-line function needs n_half + 1 samples");
  }
}

ExpKernel::ExpKernel(double a) : a_(a) { require_rate(a); }

ExpKernel::CellWeights ExpKernel::cell(double h) const {
  const double z = a_ * h;
  const double p1 = phi1(z);
  const double p2 = phi2(z);
  return {std::exp(-z), h * (p1 - p2), h * p2};
}

HalfLineFn exp_conv(double a, const HalfLineFn& f) {
  const auto w = ExpKernel(a).cell(f.grid.step());
  std::vector<double> g(f.values.size(), 0.0);
  for (std::size_t j = 0; j + 1 < g.size(); ++j) {
    g[j + 1] = w.decay * g[j] + w.near * f.values[j + 1] + w.far * f.values[j];
  }
  Tail tail = outgoing_tail(a, g.back(), f.tail);
  return {f.grid, std::move(g), std::move(tail)};
}

LineFn integrate_from_left(double a, const LineFn& b) {
  const auto w = ExpKernel(a).cell(b.grid().step());
  const auto v = b.values();
  std::vector<double> g(v.size());
  g[0] = incoming_value(a, b.tail_minus());
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    g[k + 1] = w.decay * g[k] + w.near * v[k + 1] + w.far * v[k];
  }
  Tail minus = incoming_tail(a, b.tail_minus());
  Tail plus = outgoing_tail(a, g.back(), b.tail_plus());
  return {b.grid(), std::move(g), std::move(minus), std::move(plus)};
}

LineFn integrate_from_right(double a, const LineFn& b) {
  const auto w = ExpKernel(a).cell(b.grid().step());
  const auto v = b.values();
  std::vector<double> g(v.size());
  g.back() = incoming_value(a, b.tail_plus());
  for (std::size_t k = g.size() - 1; k-- > 0;) {
    g[k] = w.decay * g[k + 1] + w.near * v[k] + w.far * v[k + 1];
  }
  Tail plus = incoming_tail(a, b.tail_plus());
  Tail minus = outgoing_tail(a, g.front(), b.tail_minus());
  return {b.grid(), std::move(g), std::move(minus), std::move(plus)};
}

LineFn dirac_left(int n, double a, const LineFn& phi) {
  if (n < 1) throw std::invalid_argument("dirac sequence index n must be >= 1");
  require_rate(a);
  const double c = n * a;
  return c * integrate_from_left(c, phi);
}

LineFn dirac_right(int n, double a, const LineFn& phi) {
  if (n < 1) throw std::invalid_argument("dirac sequence index n must be >= 1");
  require_rate(a);
  const double c = n * a;
  return c * integrate_from_right(c, phi);
}

HalfLineFn dirac_halfline(int n, double a, const HalfLineFn& phi) {
  if (n < 1) throw std::invalid_argument("dirac sequence index n must be >= 1");
  require_rate(a);
  const double c = n * a;
  HalfLineFn g = exp_conv(c, phi);
  const double h = phi.grid.step();
  const double phi0 = phi.values.front();
  for (std::size_t j = 0; j < g.values.size(); ++j) {
    g.values[j] = c * g.values[j] + std::exp(-c * static_cast<double>(j) * h) * phi0;
  }
  g.tail *= c;
  g.tail += Tail{0.0, {{phi0 * std::exp(-c * phi.grid.node(phi.grid.n_half())), c}}};
  return g;
}

HalfLineFn right_half(const SharpFn& f) {
  return {f.grid(), std::vector<double>(f.right().begin(), f.right().end()), Tail{f.lim_plus()}};
}

HalfLineFn right_half(const LineFn& f) {
  const auto v = f.values();
  return {f.grid(), std::vector<double>(v.begin() + f.grid().n_half(), v.end()), f.tail_plus()};
}

}  // namespace membranekit::conv
