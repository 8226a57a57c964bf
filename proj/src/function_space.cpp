#include "membranekit/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace membranekit {

MembraneParams::MembraneParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(alpha + beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw std::invalid_argument("membrane parameters need alpha, beta >= 0 and alpha + beta > 0");
  }
}

double MembraneParams::gamma() const noexcept {
  return std::sqrt(2.0 * (alpha_ * alpha_ + beta_ * beta_));
}

MembraneParams MembraneParams::scaled(double n) const { return {n * alpha_, n * beta_}; }

Grid::Grid(double x_max, int n_half) : x_max_(x_max), n_half_(n_half), step_(0.0) {
  if (!(x_max > 0.0) || !std::isfinite(x_max) || n_half < 1) {
    throw std::invalid_argument("grid needs x_max > 0 and n_half >= 1");
  }
  step_ = x_max / n_half;
}

// ---------------------------------------------------------------- Tail

double Tail::at(double distance) const {
  double v = limit;
  for (const auto& t : terms) {
    v += t.amplitude * std::pow(distance, t.power) * std::exp(-t.rate * distance);
  }
  return v;
}

double Tail::sup_abs() const {
  double best = std::abs(limit);
  if (terms.empty()) return best;
  best = std::max(best, std::abs(at(0.0)));
  for (const auto& t : terms) {
    if (t.rate <= 0.0) continue;
    for (double m : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      best = std::max(best, std::abs(at(m * (t.power + 1) / t.rate)));
    }
  }
  return best;
}

Tail& Tail::operator+=(const Tail& other) {
  limit += other.limit;
  for (const auto& t : other.terms) {
    auto same = std::find_if(terms.begin(), terms.end(), [&](const ExpTerm& e) {
      return e.power == t.power &&
             std::abs(e.rate - t.rate) <= 1e-14 * std::max(1.0, std::abs(t.rate));
    });
    if (same != terms.end()) {
      same->amplitude += t.amplitude;
    } else {
      terms.push_back(t);
    }
  }
  std::erase_if(terms, [](const ExpTerm& e) { return e.amplitude == 0.0; });
  return *this;
}

Tail& Tail::operator*=(double s) {
  limit *= s;
  for (auto& t : terms) t.amplitude *= s;
  std::erase_if(terms, [](const ExpTerm& e) { return e.amplitude == 0.0; });
  return *this;
}

Tail operator+(Tail a, const Tail& b) { return a += b; }
Tail operator*(double s, Tail a) { return a *= s; }

// ---------------------------------------------------------------- helpers

namespace {

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

// Piecewise-linear read of samples v at x = k h, k = 0..v.size()-1 measured
// from the first sample.
double interpolate(std::span<const double> v, double pos) {
  const double last = static_cast<double>(v.size() - 1);
  pos = std::clamp(pos, 0.0, last);
  double i = std::floor(pos);
  double frac = pos - i;
  if (frac < 1e-12) {
    frac = 0.0;
  } else if (frac > 1.0 - 1e-12) {
    i += 1.0;
    frac = 0.0;
  }
  const auto idx = static_cast<std::size_t>(i);
  if (frac == 0.0 || idx + 1 >= v.size()) return v[std::min(idx, v.size() - 1)];
  return v[idx] * (1.0 - frac) + v[idx + 1] * frac;
}

}  // namespace

// ---------------------------------------------------------------- SharpFn

SharpFn::SharpFn(Grid grid, std::vector<double> left, std::vector<double> right, double lim_minus,
                 double lim_plus)
    : grid_(grid),
      left_(std::move(left)),
      right_(std::move(right)),
      lim_minus_(lim_minus),
      lim_plus_(lim_plus) {
  const auto n = static_cast<std::size_t>(grid_.n_half()) + 1;
  if (left_.size() != n || right_.size() != n) {
    throw std::invalid_argument("SharpFn branches need n_half + 1 samples each, got " +
                                std::to_string(left_.size()) + " and " +
                                std::to_string(right_.size()));
  }
}

double SharpFn::evaluate(double x, Side side) const {
  const double edge = grid_.node(grid_.n_half());
  const double h = grid_.step();
  if (side == Side::left) {
    if (x > 0.0) throw std::invalid_argument("left branch evaluated at x > 0");
    if (x < -edge) return lim_minus_;
    return interpolate(left_, (x + edge) / h);
  }
  if (x < 0.0) throw std::invalid_argument("right branch evaluated at x < 0");
  if (x > edge) return lim_plus_;
  return interpolate(right_, x / h);
}

double SharpFn::sup_norm() const {
  double m = std::max(std::abs(lim_minus_), std::abs(lim_plus_));
  for (double v : left_) m = std::max(m, std::abs(v));
  for (double v : right_) m = std::max(m, std::abs(v));
  return m;
}

SharpFn operator+(const SharpFn& a, const SharpFn& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<double> l(a.left().begin(), a.left().end());
  std::vector<double> r(a.right().begin(), a.right().end());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] += b.left()[i];
    r[i] += b.right()[i];
  }
  return {a.grid(), std::move(l), std::move(r), a.lim_minus() + b.lim_minus(),
          a.lim_plus() + b.lim_plus()};
}

SharpFn operator*(double s, const SharpFn& a) {
  std::vector<double> l(a.left().begin(), a.left().end());
  std::vector<double> r(a.right().begin(), a.right().end());
  for (auto& v : l) v *= s;
  for (auto& v : r) v *= s;
  return {a.grid(), std::move(l), std::move(r), s * a.lim_minus(), s * a.lim_plus()};
}

SharpFn operator-(const SharpFn& a, const SharpFn& b) { return a + (-1.0) * b; }

// ---------------------------------------------------------------- LineFn

LineFn::LineFn(Grid grid, std::vector<double> values, Tail minus, Tail plus)
    : grid_(grid), values_(std::move(values)), minus_(std::move(minus)), plus_(std::move(plus)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("LineFn needs 2 n_half + 1 samples, got " +
                                std::to_string(values_.size()));
  }
}

double LineFn::at_lattice(long k) const {
  const long n = grid_.n_half();
  if (k > n) return plus_.at(static_cast<double>(k - n) * grid_.step());
  if (k < -n) return minus_.at(static_cast<double>(-n - k) * grid_.step());
  return values_[static_cast<std::size_t>(k + n)];
}

double LineFn::operator()(double x) const {
  const double edge = grid_.node(grid_.n_half());
  if (x > edge) return plus_.at(x - edge);
  if (x < -edge) return minus_.at(-edge - x);
  return interpolate(values_, (x + edge) / grid_.step());
}

double LineFn::sup_norm() const {
  double m = std::max(minus_.sup_abs(), plus_.sup_abs());
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

LineFn& LineFn::operator+=(const LineFn& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  minus_ += other.minus_;
  plus_ += other.plus_;
  return *this;
}

LineFn& LineFn::operator-=(const LineFn& other) { return *this += (-1.0) * other; }

LineFn& LineFn::operator*=(double s) {
  for (auto& v : values_) v *= s;
  minus_ *= s;
  plus_ *= s;
  return *this;
}

LineFn operator+(LineFn a, const LineFn& b) { return a += b; }
LineFn operator-(LineFn a, const LineFn& b) { return a -= b; }
LineFn operator*(double s, LineFn a) { return a *= s; }

// ---------------------------------------------------------------- FnPair

FnPair::FnPair(LineFn first, LineFn second) : f1(std::move(first)), f2(std::move(second)) {
  require_same_grid(f1.grid(), f2.grid());
}

double FnPair::sup_norm() const { return std::max(f1.sup_norm(), f2.sup_norm()); }

FnPair operator+(const FnPair& a, const FnPair& b) { return {a.f1 + b.f1, a.f2 + b.f2}; }
FnPair operator-(const FnPair& a, const FnPair& b) { return {a.f1 - b.f1, a.f2 - b.f2}; }
FnPair operator*(double s, const FnPair& a) { return {s * a.f1, s * a.f2}; }

// ---------------------------------------------------------------- algebra

SharpFn reflect(const SharpFn& f) {
  std::vector<double> l(f.right().rbegin(), f.right().rend());
  std::vector<double> r(f.left().rbegin(), f.left().rend());
  return {f.grid(), std::move(l), std::move(r), f.lim_plus(), f.lim_minus()};
}

LineFn reflect(const LineFn& f) {
  std::vector<double> v(f.values().rbegin(), f.values().rend());
  return {f.grid(), std::move(v), f.tail_plus(), f.tail_minus()};
}

SharpFn even_part(const SharpFn& f) { return 0.5 * (f + reflect(f)); }
SharpFn odd_part(const SharpFn& f) { return 0.5 * (f - reflect(f)); }
LineFn even_part(const LineFn& f) { return 0.5 * (f + reflect(f)); }
LineFn odd_part(const LineFn& f) { return 0.5 * (f - reflect(f)); }

SharpFn restrict(const FnPair& p) {
  const int n = p.grid().n_half();
  std::vector<double> l(static_cast<std::size_t>(n) + 1);
  std::vector<double> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    l[static_cast<std::size_t>(i)] = p.f1.at(i - n);
    r[static_cast<std::size_t>(i)] = p.f2.at(i);
  }
  return {p.grid(), std::move(l), std::move(r), p.f1.lim_minus(), p.f2.lim_plus()};
}

double jump(const SharpFn& f) { return f.zero_plus() - f.zero_minus(); }

bool is_continuous(const SharpFn& f, double tol) { return std::abs(jump(f)) <= tol; }

bool is_opposite(const SharpFn& f, double tol) {
  return std::abs(f.zero_plus() + f.zero_minus()) <= tol;
}

SharpFn to_sharp(const LineFn& f) {
  const int n = f.grid().n_half();
  std::vector<double> l(f.values().begin(), f.values().begin() + n + 1);
  std::vector<double> r(f.values().begin() + n, f.values().end());
  return {f.grid(), std::move(l), std::move(r), f.lim_minus(), f.lim_plus()};
}

LineFn to_line(const SharpFn& f, double tol) {
  if (!is_continuous(f, tol)) {
    throw std::domain_error("function has a jump at the membrane; not in FC[-inf,inf]");
  }
  std::vector<double> v(f.left().begin(), f.left().end());
  v.back() = 0.5 * (f.zero_minus() + f.zero_plus());
  v.insert(v.end(), f.right().begin() + 1, f.right().end());
  return {f.grid(), std::move(v), f.lim_minus(), f.lim_plus()};
}

LineFn j_iso(const SharpFn& f, double tol) {
  if (!is_opposite(f, tol)) {
    throw std::domain_error("J needs opposite boundary values f(0+) = -f(0-)");
  }
  const int n = f.grid().n_half();
  std::vector<double> v(f.grid().size());
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = -f.left()[static_cast<std::size_t>(i)];
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(n + j)] = f.right()[static_cast<std::size_t>(j)];
  return {f.grid(), std::move(v), -f.lim_minus(), f.lim_plus()};
}

SharpFn j_inv(const LineFn& g) {
  const int n = g.grid().n_half();
  std::vector<double> l(static_cast<std::size_t>(n) + 1);
  std::vector<double> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    l[static_cast<std::size_t>(i)] = -g.at(i - n);
    r[static_cast<std::size_t>(i)] = g.at(i);
  }
  return {g.grid(), std::move(l), std::move(r), -g.lim_minus(), g.lim_plus()};
}

}  // namespace membranekit
