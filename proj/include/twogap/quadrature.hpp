#pragma once

#include <functional>
#include <vector>

namespace twogap::quadrature {

inline constexpr double kDefaultTol = 1e-13;

/// Integration interval carrying Jacobi-type endpoint weights
/// (x - lower)^left_exponent * (upper - x)^right_exponent.
struct SingularInterval {
  double lower;
  double upper;
  double left_exponent = 0.0;
  double right_exponent = 0.0;
};

using Integrand = std::function<double(double)>;

/// Gauss-Jacobi rule on [-1, 1] for the weight (1 - x)^a (1 + x)^b.
struct JacobiRule {
  double a;
  double b;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the cached n-point rule; rules are immutable once built.
const JacobiRule& gauss_jacobi(int n, double a, double b);

/// Integral of f times the endpoint weights of `interval`. Doubles the node
/// count from 16 up to 4096 until two estimates agree to `tol` relative to
/// the integral of |f| times the weight. Throws QuadratureError otherwise.
double integrate_singular(const Integrand& f, const SingularInterval& interval,
                          double tol = kDefaultTol);

/// Integral over [lower, inf) of f(t) * (t - lower)^left_exponent, using
/// t = lower + u / (1 - u) with u = s (2 - s). Requires f(t) = O(t^-3/2).
double integrate_tail(const Integrand& f, double lower, double left_exponent,
                      double tol = kDefaultTol);

}  // namespace twogap::quadrature
