#include "twogap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include "twogap/errors.hpp"

namespace twogap::quadrature {
namespace {

constexpr int kMinNodes = 16;
constexpr int kMaxNodes = 4096;

// P_n^{(a,b)}(x) and P_{n-1}^{(a,b)}(x) by the three-term recurrence.
std::pair<double, double> jacobi_pair(int n, double a, double b, double x) {
  double prev = 1.0;
  double cur = 0.5 * ((a + b + 2.0) * x + (a - b));
  if (n == 0) return {prev, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

double jacobi_derivative(int n, double a, double b, double x, double pn, double pn1) {
  const double s = 2.0 * n + a + b;
  return (n * ((a - b) - s * x) * pn + 2.0 * (n + a) * (n + b) * pn1) /
         (s * (1.0 - x * x));
}

std::unique_ptr<JacobiRule> build_rule(int n, double a, double b) {
  auto rule = std::make_unique<JacobiRule>();
  rule->a = a;
  rule->b = b;
  rule->nodes.resize(n);
  rule->weights.resize(n);
  const double log_const = (a + b + 1.0) * std::log(2.0) + std::lgamma(n + a + 1.0) +
                           std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) -
                           std::lgamma(n + 1.0);
  const double scale = std::exp(log_const);
  for (int k = 1; k <= n; ++k) {
    const double theta =
        std::numbers::pi * (k - 0.25 + 0.5 * a) / (n + 0.5 * (a + b + 1.0));
    double x = std::cos(theta);
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [pn, pn1] = jacobi_pair(n, a, b, x);
      dp = jacobi_derivative(n, a, b, x, pn, pn1);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    auto [pn, pn1] = jacobi_pair(n, a, b, x);
    dp = jacobi_derivative(n, a, b, x, pn, pn1);
    rule->nodes[n - k] = x;
    rule->weights[n - k] = scale / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double apply_rule(const JacobiRule& rule, const Integrand& f, double lower, double half,
                  double* abs_sum) {
  double sum = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = rule.weights[i] * f(lower + half * (1.0 + rule.nodes[i]));
    sum += v;
    mag += std::abs(v);
  }
  *abs_sum = mag;
  return sum;
}

}  // namespace

const JacobiRule& gauss_jacobi(int n, double a, double b) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::unique_ptr<JacobiRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, a, b}];
  if (!slot) slot = build_rule(n, a, b);
  return *slot;
}

double integrate_singular(const Integrand& f, const SingularInterval& interval, double tol) {
  if (!(interval.lower < interval.upper)) {
    throw DomainError("integrate_singular: lower must be below upper");
  }
  if (!(tol > 0.0)) throw DomainError("integrate_singular: tol must be positive");
  const double half = 0.5 * (interval.upper - interval.lower);
  // The rule's (1 - x) factor sits at the upper end, (1 + x) at the lower end.
  const double a = interval.right_exponent;
  const double b = interval.left_exponent;
  const double jac = std::pow(half, 1.0 + a + b);

  double abs_sum = 0.0;
  double previous = jac * apply_rule(gauss_jacobi(kMinNodes, a, b), f, interval.lower, half,
                                     &abs_sum);
  double current = previous;
  for (int n = 2 * kMinNodes; n <= kMaxNodes; n *= 2) {
    current = jac * apply_rule(gauss_jacobi(n, a, b), f, interval.lower, half, &abs_sum);
    const double scale = std::max(std::abs(current), jac * abs_sum * 1e-3);
    if (std::abs(current - previous) <= tol * scale) return current;
    if (n < kMaxNodes) previous = current;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "integrate_singular: no convergence at " << kMaxNodes << " nodes on ["
      << interval.lower << ", " << interval.upper << "], last estimates " << previous
      << " and " << current;
  throw QuadratureError(msg.str(), previous, current);
}

double integrate_tail(const Integrand& f, double lower, double left_exponent, double tol) {
  // t = lower + u/(1-u) with u = s(2-s), so 1-u = (1-s)^2. The squared
  // variable keeps algebraic decay like t^-2 or t^-3/2 smooth at s = 1.
  // (t - lower)^e dt = s^e (2-s)^e (1-s)^(-2e-3) 2 ds.
  auto g = [&](double s) {
    const double r = 1.0 - s;
    const double t = lower + s * (2.0 - s) / (r * r);
    return 2.0 * f(t) * std::pow(2.0 - s, left_exponent) * std::pow(r, -2.0 * left_exponent - 3.0);
  };
  return integrate_singular(g, {0.0, 1.0, left_exponent, 0.0}, tol);
}

}  // namespace twogap::quadrature
