#include "membranekit/extensions.hpp"

#include <cmath>
#include <stdexcept>

#include "membranekit/conv.hpp"

namespace membranekit {

namespace {

std::size_t idx(int k, int n) { return static_cast<std::size_t>(k + n); }

// Affine reflection formulas shared by the skew and weks extensions:
//   f_l(x) = cl_mirror * f(-x) + cl_same * f(x),  x > 0,
//   f_r(x) = cr_same * f(x) + cr_mirror * f(-x),  x < 0,
// with the branch values read from f's left samples (x <= 0) and right
// samples (x >= 0).
FnPair affine_extension(const Grid& grid, std::span<const double> left,
                        std::span<const double> right, const Tail& minus, const Tail& plus,
                        double cl_mirror, double cl_same, double cr_same, double cr_mirror) {
  const int n = grid.n_half();
  std::vector<double> fl(grid.size());
  std::vector<double> fr(grid.size());
  const auto nn = static_cast<std::size_t>(n);
  for (int k = -n; k <= 0; ++k) fl[idx(k, n)] = left[idx(k, n)];
  for (int k = 0; k <= n; ++k) fr[idx(k, n)] = right[static_cast<std::size_t>(k)];
  for (int j = 1; j <= n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const double f_neg = left[nn - uj];  // f(-x_j)
    const double f_pos = right[uj];      // f(x_j)
    fl[idx(j, n)] = cl_mirror * f_neg + cl_same * f_pos;
    fr[idx(-j, n)] = cr_same * f_neg + cr_mirror * f_pos;
  }
  Tail fl_plus = cl_mirror * minus + cl_same * plus;
  Tail fr_minus = cr_same * minus + cr_mirror * plus;
  return {LineFn(grid, std::move(fl), minus, std::move(fl_plus)),
          LineFn(grid, std::move(fr), std::move(fr_minus), plus)};
}

}  // namespace

FnPair extend_so(const MembraneParams& p, const SharpFn& f) {
  const Grid& grid = f.grid();
  const int n = grid.n_half();
  const auto nn = static_cast<std::size_t>(n);
  const double a = p.sum();

  // phi = f - f^T on [0, X], with phi(0) = f(0+) - f(0-).
  std::vector<double> phi(nn + 1);
  for (std::size_t j = 0; j <= nn; ++j) phi[j] = f.right()[j] - f.left()[nn - j];
  const conv::HalfLineFn g =
      conv::exp_conv(a, {grid, std::move(phi), Tail{f.lim_plus() - f.lim_minus()}});

  std::vector<double> fl(grid.size());
  std::vector<double> fr(grid.size());
  for (int k = -n; k <= 0; ++k) fl[idx(k, n)] = f.left_at(k);
  for (int k = 0; k <= n; ++k) fr[idx(k, n)] = f.right_at(k);
  for (int j = 1; j <= n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    fl[idx(j, n)] = f.left()[nn - uj] + 2.0 * p.alpha() * g.values[uj];
    fr[idx(-j, n)] = f.right()[uj] - 2.0 * p.beta() * g.values[uj];
  }
  Tail fl_plus = Tail{f.lim_minus()} + (2.0 * p.alpha()) * g.tail;
  Tail fr_minus = Tail{f.lim_plus()} + (-2.0 * p.beta()) * g.tail;
  return {LineFn(grid, std::move(fl), Tail{f.lim_minus()}, std::move(fl_plus)),
          LineFn(grid, std::move(fr), std::move(fr_minus), Tail{f.lim_plus()})};
}

FnPair extend_skew(const MembraneParams& p, const LineFn& f) {
  const int n = f.grid().n_half();
  const auto v = f.values();
  const double s = p.sum();
  return affine_extension(f.grid(), v.subspan(0, static_cast<std::size_t>(n) + 1),
                          v.subspan(static_cast<std::size_t>(n)), f.tail_minus(), f.tail_plus(),
                          (p.beta() - p.alpha()) / s, 2.0 * p.alpha() / s, 2.0 * p.beta() / s,
                          (p.alpha() - p.beta()) / s);
}

FnPair limit_extension_so(const MembraneParams& p, const SharpFn& f) {
  const double s = p.sum();
  return affine_extension(f.grid(), f.left(), f.right(), Tail{f.lim_minus()}, Tail{f.lim_plus()},
                          (p.beta() - p.alpha()) / s, 2.0 * p.alpha() / s, 2.0 * p.beta() / s,
                          (p.alpha() - p.beta()) / s);
}

FnPair extend_os(const MembraneParams& p, const SharpFn& f, double tol) {
  if (!is_opposite(f, tol)) {
    throw std::domain_error("extend_os needs opposite boundary values f(0+) = -f(0-)");
  }
  const Grid& grid = f.grid();
  const int n = grid.n_half();
  const auto nn = static_cast<std::size_t>(n);
  const double a = p.sum();
  const double f0 = f.zero_plus();

  // phi = beta f - alpha f^T on [0, X].
  std::vector<double> phi(nn + 1);
  for (std::size_t j = 0; j <= nn; ++j) {
    phi[j] = p.beta() * f.right()[j] - p.alpha() * f.left()[nn - j];
  }
  const conv::HalfLineFn g = conv::exp_conv(
      a, {grid, std::move(phi), Tail{p.beta() * f.lim_plus() - p.alpha() * f.lim_minus()}});

  std::vector<double> fl(grid.size());
  std::vector<double> fr(grid.size());
  for (int k = -n; k <= 0; ++k) fl[idx(k, n)] = f.left_at(k);
  for (int k = 0; k <= n; ++k) fr[idx(k, n)] = f.right_at(k);
  for (int j = 1; j <= n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const double boundary = 2.0 * f0 * std::exp(-a * grid.node(j));
    fl[idx(j, n)] = -f.left()[nn - uj] - boundary - 2.0 * g.values[uj];
    fr[idx(-j, n)] = -f.right()[uj] + boundary + 2.0 * g.values[uj];
  }
  const double edge_boundary = 2.0 * f0 * std::exp(-a * grid.node(n));
  Tail fl_plus = Tail{-f.lim_minus(), {{-edge_boundary, a}}} + (-2.0) * g.tail;
  Tail fr_minus = Tail{-f.lim_plus(), {{edge_boundary, a}}} + 2.0 * g.tail;
  return {LineFn(grid, std::move(fl), Tail{f.lim_minus()}, std::move(fl_plus)),
          LineFn(grid, std::move(fr), std::move(fr_minus), Tail{f.lim_plus()})};
}

FnPair extend_weks(const MembraneParams& p, const SharpFn& f, double tol) {
  if (!is_opposite(f, tol)) {
    throw std::domain_error("extend_weks needs opposite boundary values f(0+) = -f(0-)");
  }
  const double s = p.sum();
  return affine_extension(f.grid(), f.left(), f.right(), Tail{f.lim_minus()}, Tail{f.lim_plus()},
                          (p.alpha() - p.beta()) / s, -2.0 * p.beta() / s, -2.0 * p.alpha() / s,
                          (p.beta() - p.alpha()) / s);
}

}  // namespace membranekit
