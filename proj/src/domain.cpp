#include "twogap/domain.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

#include "twogap/errors.hpp"

namespace twogap {

void validate(const TwoIntervalDomain& domain, bool allow_degenerate) {
  const bool a_ok = std::isfinite(domain.A) && domain.A > 1.0;
  const bool b_ok = std::isfinite(domain.B) &&
                    (allow_degenerate ? domain.B >= 1.0 : domain.B > 1.0);
  if (!a_ok || !b_ok) {
    std::ostringstream msg;
    msg << "invalid domain A=" << domain.A << ", B=" << domain.B << ": need A > 1 and B "
        << (allow_degenerate ? ">= 1" : "> 1");
    throw DomainError(msg.str());
  }
}

namespace domain_chars {
namespace {

using quadrature::integrate_singular;

void require_gap_point(double x, const char* who) {
  if (!(x > -1.0 && x < 1.0)) {
    throw DomainError(std::string(who) + ": point must lie in the open gap (-1, 1)");
  }
}

// ((t+A)(B-t))^-1/2, the smooth part of the gap weight.
double gap_smooth(const TwoIntervalDomain& d, double t) {
  return 1.0 / std::sqrt((t + d.A) * (d.B - t));
}

// Integral of the gap weight over (-1, x).
double gap_weight_from_left(const TwoIntervalDomain& d, double x, double tol) {
  if (x <= -1.0) return 0.0;
  auto f = [&](double t) { return gap_smooth(d, t) / std::sqrt(1.0 - t); };
  return integrate_singular(f, {-1.0, x, -0.5, 0.0}, tol);
}

// Integral of the gap weight over (x, 1).
double gap_weight_from_right(const TwoIntervalDomain& d, double x, double tol) {
  if (x >= 1.0) return 0.0;
  auto f = [&](double t) { return gap_smooth(d, t) / std::sqrt(1.0 + t); };
  return integrate_singular(f, {x, 1.0, 0.0, -0.5}, tol);
}

}  // namespace

double gap_period(const TwoIntervalDomain& domain, double tol) {
  validate(domain);
  auto f = [&](double t) { return gap_smooth(domain, t); };
  return integrate_singular(f, {-1.0, 1.0, -0.5, -0.5}, tol);
}

double critical_point(const TwoIntervalDomain& domain, double tol) {
  validate(domain);
  const double mass = gap_period(domain, tol);
  auto first = [&](double t) { return t * gap_smooth(domain, t); };
  const double moment = integrate_singular(first, {-1.0, 1.0, -0.5, -0.5}, tol);
  const double C = moment / mass;

  // Certify the defining residual of the critical point.
  auto residual_f = [&](double t) { return (C - t) * gap_smooth(domain, t); };
  const double residual = integrate_singular(residual_f, {-1.0, 1.0, -0.5, -0.5}, tol);
  if (!(std::abs(residual) <= 10.0 * tol * mass) || !(C > -1.0 && C < 1.0)) {
    throw ConvergenceError("critical_point: residual check failed");
  }
  return C;
}

double green_gap(const TwoIntervalDomain& domain, double C, double x, double tol) {
  validate(domain);
  require_gap_point(x, "green_gap");
  // Integrate from whichever gap end keeps the integrand one-signed.
  if (x <= C) {
    auto f = [&](double t) { return (C - t) * gap_smooth(domain, t) / std::sqrt(1.0 - t); };
    return integrate_singular(f, {-1.0, x, -0.5, 0.0}, tol);
  }
  auto f = [&](double t) { return (t - C) * gap_smooth(domain, t) / std::sqrt(1.0 + t); };
  return integrate_singular(f, {x, 1.0, 0.0, -0.5}, tol);
}

double eta1(const TwoIntervalDomain& domain, double C) {
  validate(domain);
  require_gap_point(C, "eta1");
  return 0.5 / std::sqrt((1.0 - C * C) * (C + domain.A) * (domain.B - C));
}

double right_branch_integral(const TwoIntervalDomain& d, double u, double tol) {
  if (u <= 0.0) return 0.0;
  // With s = 1-u and N = B s + u the integrand is u^-1/2 ((N^2-s^2)(N+A s))^-1/2.
  auto f = [&](double v) {
    const double s = 1.0 - v;
    const double n = d.B * s + v;
    return 1.0 / std::sqrt((n * n - s * s) * (n + d.A * s));
  };
  return integrate_singular(f, {0.0, std::min(u, 1.0), -0.5, 0.0}, tol);
}

double left_branch_integral(const TwoIntervalDomain& d, double u, double tol) {
  if (u <= 0.0) return 0.0;
  auto f = [&](double v) {
    const double s = 1.0 - v;
    const double m = d.A * s + v;
    return 1.0 / std::sqrt((m * m - s * s) * (m + d.B * s));
  };
  return integrate_singular(f, {0.0, std::min(u, 1.0), -0.5, 0.0}, tol);
}

double harmonic_measure(const TwoIntervalDomain& domain, double x, double tol) {
  validate(domain);
  const double c0 = gap_period(domain, tol);
  if (std::isinf(x)) return right_branch_integral(domain, 1.0, tol) / c0;
  if (x >= domain.B) {
    const double u = (x - domain.B) / (x - domain.B + 1.0);
    return right_branch_integral(domain, u, tol) / c0;
  }
  if (x <= -domain.A) {
    const double u = (-domain.A - x) / (-domain.A - x + 1.0);
    return 1.0 - left_branch_integral(domain, u, tol) / c0;
  }
  throw DomainError("harmonic_measure: point must lie outside (-A, B)");
}

double harmonic_measure_gap(const TwoIntervalDomain& domain, double x, double tol) {
  validate(domain);
  require_gap_point(x, "harmonic_measure_gap");
  const double c0 = gap_period(domain, tol);
  if (x >= 0.0) return gap_weight_from_right(domain, x, tol) / c0;
  return 1.0 - gap_weight_from_left(domain, x, tol) / c0;
}

double modulus_p(const TwoIntervalDomain& domain, double tol) {
  validate(domain);
  auto f = [&](double t) { return 1.0 / std::sqrt((t + 1.0) * (t + domain.A)); };
  const double top = integrate_singular(f, {1.0, domain.B, -0.5, -0.5}, tol);
  return top / gap_period(domain, tol);
}

GreenCharacteristics characteristics(const TwoIntervalDomain& domain, double tol) {
  validate(domain);
  GreenCharacteristics g;
  g.A = domain.A;
  g.B = domain.B;
  g.c0_abs = gap_period(domain, tol);
  g.C = critical_point(domain, tol);
  g.eta = green_gap(domain, g.C, g.C, tol);
  g.eta1 = eta1(domain, g.C);
  g.alpha = right_branch_integral(domain, 1.0, tol) / g.c0_abs;
  g.omegaC = harmonic_measure_gap(domain, g.C, tol);
  g.p = modulus_p(domain, tol);
  g.rho = std::exp(-std::numbers::pi / g.p);
  return g;
}

}  // namespace domain_chars
}  // namespace twogap
