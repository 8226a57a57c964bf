#pragma once

// Quadrature against one-sided exponential kernels.
//
// Every integral here is evaluated by the exact-exponential recurrence
//   g(x + h) = e^{-a h} g(x) + int_0^h e^{-a (h - s)} f(x + s) ds
// with f linear on each cell, so the kernel itself is never sampled and the
// scheme stays stable for any a h (including a h >> 1).

#include <vector>

#include "membranekit/function_space.hpp"

namespace membranekit::conv {

/// Samples on 0, h, ..., X together with the behaviour beyond X.
struct HalfLineFn {
  Grid grid;
  std::vector<double> values;
  Tail tail;

  HalfLineFn(Grid g, std::vector<double> v, Tail t);
  double limit() const noexcept { return tail.limit; }
};

/// e_a(x) = exp(-a x) on x >= 0.
class ExpKernel {
 public:
  explicit ExpKernel(double a);

  double rate() const noexcept { return a_; }

  /// One cell of length h: the result is decay * g_prev + near * f_near + far * f_far,
  /// where f_near is the sample at the end the integral is evaluated at.
  struct CellWeights {
    double decay;
    double near;
    double far;
  };
  CellWeights cell(double h) const;

 private:
  double a_;
};

/// (e_a * f)(x) = int_0^x exp(-a (x - y)) f(y) dy; g(0) = 0.
HalfLineFn exp_conv(double a, const HalfLineFn& f);

/// int_{-inf}^x exp(-a (x - y)) b(y) dy at every node; tails are exact under b's tail model.
LineFn integrate_from_left(double a, const LineFn& b);
/// int_x^{inf} exp(a (x - y)) b(y) dy at every node.
LineFn integrate_from_right(double a, const LineFn& b);

/// n a int_{-inf}^x exp(-n a (x - y)) phi(y) dy.
LineFn dirac_left(int n, double a, const LineFn& phi);
/// n a int_x^{inf} exp(n a (x - y)) phi(y) dy.
LineFn dirac_right(int n, double a, const LineFn& phi);
/// n a (e_{na} * phi)(x) + exp(-n a x) phi(0); unit mass on [0, x].
HalfLineFn dirac_halfline(int n, double a, const HalfLineFn& phi);

/// Right branch of f as a half-line function (x >= 0, f(0+) first).
HalfLineFn right_half(const SharpFn& f);
HalfLineFn right_half(const LineFn& f);

}  // namespace membranekit::conv
