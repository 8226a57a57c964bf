#pragma once

// Discrete functions on the split line R# = [-inf,0-] u [0+,inf] and on the
// compactified line [-inf,inf], sampled on a symmetric grid that contains 0.

#include <cstddef>
#include <span>
#include <vector>

namespace membranekit {

/// Membrane permeabilities: alpha (left to right) and beta (right to left).
class MembraneParams {
 public:
  MembraneParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double sum() const noexcept { return alpha_ + beta_; }
  /// sqrt(2 (alpha^2 + beta^2)), always recomputed.
  double gamma() const noexcept;

  /// (n alpha, n beta).
  MembraneParams scaled(double n) const;
  /// (beta, alpha).
  MembraneParams swapped() const { return {beta_, alpha_}; }

 private:
  double alpha_;
  double beta_;
};

/// Symmetric grid -X, -X+h, ..., 0, ..., X with h = X / n_half.
/// Nodes are addressed by signed index k in [-n_half, n_half]; node(k) = k h,
/// so node(-k) == -node(k) holds bit for bit.
class Grid {
 public:
  Grid(double x_max, int n_half);

  double x_max() const noexcept { return x_max_; }
  int n_half() const noexcept { return n_half_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return 2 * static_cast<std::size_t>(n_half_) + 1; }
  double node(int k) const noexcept { return k * step_; }

  bool operator==(const Grid& other) const noexcept {
    return x_max_ == other.x_max_ && n_half_ == other.n_half_;
  }

 private:
  double x_max_;
  int n_half_;
  double step_;
};

/// A sum of decaying exponentials describing a function beyond the grid edge:
/// value at distance d > 0 outside [-X, X] is limit + sum a_i d^{p_i} exp(-r_i d).
/// Constant tails (no terms) are the default model; exponential terms appear
/// only where a convolution with e^{-a x} is carried past X analytically.
struct ExpTerm {
  double amplitude;
  double rate;
  int power = 0;  ///< nonzero only after convolving a tail with a kernel of its own rate
};

struct Tail {
  double limit = 0.0;
  std::vector<ExpTerm> terms;

  Tail() = default;
  Tail(double lim) : limit(lim) {}  // NOLINT(google-explicit-constructor)
  Tail(double lim, std::vector<ExpTerm> t) : limit(lim), terms(std::move(t)) {}

  double at(double distance) const;
  /// Largest absolute value the tail takes on (0, inf), for sup-norms.
  double sup_abs() const;
  bool is_constant() const noexcept { return terms.empty(); }

  Tail& operator+=(const Tail& other);
  Tail& operator*=(double s);
};

Tail operator+(Tail a, const Tail& b);
Tail operator*(double s, Tail a);

enum class Side { left, right };

/// Function on R#: two branches sharing the node at 0 but storing f(0-) and
/// f(0+) separately. Beyond |x| > X the branches equal their limits.
class SharpFn {
 public:
  SharpFn(Grid grid, std::vector<double> left, std::vector<double> right, double lim_minus,
          double lim_plus);

  const Grid& grid() const noexcept { return grid_; }
  /// Samples at x = -X ... 0 (last entry is f(0-)).
  std::span<const double> left() const noexcept { return left_; }
  /// Samples at x = 0 ... X (first entry is f(0+)).
  std::span<const double> right() const noexcept { return right_; }
  double lim_minus() const noexcept { return lim_minus_; }
  double lim_plus() const noexcept { return lim_plus_; }
  double zero_minus() const noexcept { return left_.back(); }
  double zero_plus() const noexcept { return right_.front(); }

  /// Value at node k in [-n, 0] from the left branch.
  double left_at(int k) const { return left_[static_cast<std::size_t>(k + grid_.n_half())]; }
  /// Value at node k in [0, n] from the right branch.
  double right_at(int k) const { return right_[static_cast<std::size_t>(k)]; }

  /// Linear interpolation on the branch selected by side; constant tails.
  double evaluate(double x, Side side) const;
  /// Branch chosen by the sign of x; x == 0 reads f(0+).
  double operator()(double x) const { return evaluate(x, x < 0 ? Side::left : Side::right); }

  double sup_norm() const;

 private:
  Grid grid_;
  std::vector<double> left_;
  std::vector<double> right_;
  double lim_minus_;
  double lim_plus_;
};

/// Function on [-inf, inf], continuous at 0.
class LineFn {
 public:
  LineFn(Grid grid, std::vector<double> values, Tail minus, Tail plus);
  LineFn(Grid grid, std::vector<double> values, double lim_minus, double lim_plus)
      : LineFn(grid, std::move(values), Tail{lim_minus}, Tail{lim_plus}) {}

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double lim_minus() const noexcept { return minus_.limit; }
  double lim_plus() const noexcept { return plus_.limit; }
  const Tail& tail_minus() const noexcept { return minus_; }
  const Tail& tail_plus() const noexcept { return plus_; }

  /// Value at node k in [-n, n].
  double at(int k) const { return values_[static_cast<std::size_t>(k + grid_.n_half())]; }
  /// Value at lattice index k, which may lie outside the grid (tail model).
  double at_lattice(long k) const;
  /// Linear interpolation inside [-X, X], tail model outside.
  double operator()(double x) const;

  double sup_norm() const;

  LineFn& operator+=(const LineFn& other);
  LineFn& operator-=(const LineFn& other);
  LineFn& operator*=(double s);

 private:
  Grid grid_;
  std::vector<double> values_;
  Tail minus_;
  Tail plus_;
};

LineFn operator+(LineFn a, const LineFn& b);
LineFn operator-(LineFn a, const LineFn& b);
LineFn operator*(double s, LineFn a);

SharpFn operator+(const SharpFn& a, const SharpFn& b);
SharpFn operator-(const SharpFn& a, const SharpFn& b);
SharpFn operator*(double s, const SharpFn& a);

/// An element of (FC[-inf,inf])^2; both components share a grid.
struct FnPair {
  FnPair(LineFn first, LineFn second);

  LineFn f1;
  LineFn f2;

  const Grid& grid() const noexcept { return f1.grid(); }
  double sup_norm() const;
};

FnPair operator+(const FnPair& a, const FnPair& b);
FnPair operator-(const FnPair& a, const FnPair& b);
FnPair operator*(double s, const FnPair& a);

// Reflections and parity.
SharpFn reflect(const SharpFn& f);
LineFn reflect(const LineFn& f);
SharpFn even_part(const SharpFn& f);
SharpFn odd_part(const SharpFn& f);
LineFn even_part(const LineFn& f);
LineFn odd_part(const LineFn& f);

/// R(f1, f2): f1 on x < 0 (with f(0-) = f1(0)), f2 on x > 0.
/// Tails of the result keep only the limits.
SharpFn restrict(const FnPair& p);

double jump(const SharpFn& f);
bool is_continuous(const SharpFn& f, double tol = 1e-9);
bool is_opposite(const SharpFn& f, double tol = 1e-9);

/// Continuous function viewed on R# (zero jump).
SharpFn to_sharp(const LineFn& f);
/// Merge the branches of a continuous SharpFn; throws std::domain_error on a jump.
LineFn to_line(const SharpFn& f, double tol = 1e-9);

/// Isometry between opposite-value functions and FC[-inf,inf]: negate the
/// left branch and glue at f(0+). Throws std::domain_error if f is not
/// opposite-valued.
LineFn j_iso(const SharpFn& f, double tol = 1e-9);
SharpFn j_inv(const LineFn& g);

}  // namespace membranekit
