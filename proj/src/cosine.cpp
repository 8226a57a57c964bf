#include "membranekit/cosine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "membranekit/extensions.hpp"

namespace membranekit {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::snapping_out: return "s-o";
    case Family::skew: return "skew";
    case Family::complementary: return "o-s";
    case Family::weks: return "weks";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  if (name == "s-o" || name == "so" || name == "snapping-out") return Family::snapping_out;
  if (name == "skew") return Family::skew;
  if (name == "o-s" || name == "os" || name == "complementary") return Family::complementary;
  if (name == "weks") return Family::weks;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

// Averages g(x_k + t) and g(x_k - t) over node indices [k_lo, k_hi]; lattice
// shifts read samples directly.
std::vector<double> translate_average(double t, const LineFn& g, int k_lo, int k_hi) {
  const double h = g.grid().step();
  const double m_real = t / h;
  const double m_round = std::round(m_real);
  std::vector<double> out(static_cast<std::size_t>(k_hi - k_lo + 1));
  if (std::abs(m_real - m_round) <= 1e-9) {
    const auto m = static_cast<long>(m_round);
    for (int k = k_lo; k <= k_hi; ++k) {
      out[static_cast<std::size_t>(k - k_lo)] = 0.5 * (g.at_lattice(k + m) + g.at_lattice(k - m));
    }
  } else {
    for (int k = k_lo; k <= k_hi; ++k) {
      const double x = g.grid().node(k);
      out[static_cast<std::size_t>(k - k_lo)] = 0.5 * (g(x + t) + g(x - t));
    }
  }
  return out;
}

}  // namespace

LineFn basic_cosine(double t, const LineFn& f) {
  const int n = f.grid().n_half();
  return {f.grid(), translate_average(t, f, -n, n), f.lim_minus(), f.lim_plus()};
}

FnPair product_cosine(double t, const FnPair& p) {
  return {basic_cosine(t, p.f1), basic_cosine(t, p.f2)};
}

SharpFn restricted_cosine(double t, const FnPair& extension) {
  const int n = extension.grid().n_half();
  return {extension.grid(), translate_average(t, extension.f1, -n, 0),
          translate_average(t, extension.f2, 0, n), extension.f1.lim_minus(),
          extension.f2.lim_plus()};
}

FnPair extend(Family family, const MembraneParams& p, const SharpFn& f, double tol) {
  switch (family) {
    case Family::snapping_out: return extend_so(p, f);
    case Family::skew: return extend_skew(p, to_line(f, tol));
    case Family::complementary: return extend_os(p, f, tol);
    case Family::weks: return extend_weks(p, f, tol);
  }
  throw std::invalid_argument("unknown family");
}

SharpFn kelvin_cosine(Family family, const MembraneParams& p, double t, const SharpFn& f,
                      double tol) {
  return restricted_cosine(t, extend(family, p, f, tol));
}

LineFn skew_cosine(const MembraneParams& p, double t, const LineFn& f) {
  const SharpFn r = restricted_cosine(t, extend_skew(p, f));
  // Both branches agree at 0 up to rounding; keep their mean.
  std::vector<double> v(r.left().begin(), r.left().end());
  v.back() = 0.5 * (r.zero_minus() + r.zero_plus());
  v.insert(v.end(), r.right().begin() + 1, r.right().end());
  return {f.grid(), std::move(v), r.lim_minus(), r.lim_plus()};
}

LineFn generator_quotient(double t, const LineFn& f) {
  if (t == 0.0) throw std::invalid_argument("generator quotient needs t != 0");
  LineFn c = basic_cosine(t, f);
  c -= f;
  c *= 2.0 / (t * t);
  return c;
}

}  // namespace membranekit
