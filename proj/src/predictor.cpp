#include "twogap/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "twogap/errors.hpp"
#include "twogap/ring_green.hpp"
#include "twogap/theta.hpp"

namespace twogap::predictor {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisection = 200;

void require_n(int n) {
  if (n < 0) throw DomainError("predictor: n must be non-negative");
}

// Bisection for the u in [0, 1] with measure(u) == target; measure increasing.
template <typename Measure>
double bisect_increasing(Measure measure, double target, double tol) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double value = measure(mid);
    if (std::abs(value - target) < tol) return mid;
    (value < target ? lo : hi) = mid;
    if (hi - lo <= std::numeric_limits<double>::epsilon() * 0.5 * (lo + hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double phase(int n, const GreenCharacteristics& chars) {
  require_n(n);
  const double x = chars.alpha * n + chars.omegaC;
  const double frac = x - std::floor(x);
  return frac >= 1.0 ? 0.0 : frac;
}

double solve_Dn(const GreenCharacteristics& chars, double phase, double tol) {
  if (!(phase >= 0.0 && phase < 1.0)) throw DomainError("solve_Dn: phase must lie in [0, 1)");
  const TwoIntervalDomain d = chars.domain();
  if (phase == 0.0) return d.B;
  if (std::abs(phase - chars.alpha) < 1e-14) return std::numeric_limits<double>::infinity();
  if (phase < chars.alpha) {
    auto measure = [&](double u) {
      return domain_chars::right_branch_integral(d, u) / chars.c0_abs;
    };
    const double u = bisect_increasing(measure, phase, tol);
    return d.B + u / (1.0 - u);
  }
  // Left ray: omega = 1 - I_left(u)/|c0| decreases from 1 at -A to alpha at -inf.
  auto measure = [&](double u) { return domain_chars::left_branch_integral(d, u) / chars.c0_abs; };
  const double u = bisect_increasing(measure, 1.0 - phase, tol);
  return -d.A - u / (1.0 - u);
}

double nome(const GreenCharacteristics& chars) { return std::exp(-kPi * chars.p); }

double theta_ratio_at_phase(const GreenCharacteristics& chars, double phase) {
  const theta::ThetaParams params{nome(chars)};
  const double num = theta::theta0(0.5 * (phase + chars.omegaC), params);
  const double den = theta::theta0(0.5 * (phase - chars.omegaC), params);
  return std::abs(num / den);
}

double theta_ratio(int n, const GreenCharacteristics& chars) {
  return theta_ratio_at_phase(chars, phase(n, chars));
}

double theorem_constant(const GreenCharacteristics& chars) {
  return 2.0 / std::sqrt(kPi * chars.eta1) * std::exp(-chars.eta2);
}

namespace {

double a_n_from_green(int n, const GreenCharacteristics& chars, double g) {
  return chars.eta * n - g - 0.5 * std::log(2.0 * chars.eta / chars.eta1) + chars.eta2;
}

double green_at(const GreenCharacteristics& chars, double ph, double D) {
  if (ph == 0.0) return 0.0;
  return ring::green_DC(chars, D);
}

}  // namespace

double a_n(int n, const GreenCharacteristics& chars) {
  const double ph = phase(n, chars);
  return a_n_from_green(n, chars, green_at(chars, ph, solve_Dn(chars, ph)));
}

PredictionRecord predict(int n, const GreenCharacteristics& chars) {
  if (n < 1) throw DomainError("predict: n must be at least 1");
  PredictionRecord r;
  r.n = n;
  r.phase = phase(n, chars);
  r.D_n = solve_Dn(chars, r.phase);
  r.G_DC = green_at(chars, r.phase, r.D_n);
  r.a_n = a_n_from_green(n, chars, r.G_DC);
  r.theta_ratio = theta_ratio_at_phase(chars, r.phase);
  r.theta_ratio_raw = 1.0 / r.theta_ratio;
  r.L_theorem = theorem_constant(chars) / std::sqrt(static_cast<double>(n)) *
                std::exp(-chars.eta * n) * r.theta_ratio;
  if (r.a_n > 0.0) {
    r.L_refined = std::sqrt(2.0 / kPi) / std::sqrt(r.a_n) * std::exp(-r.a_n);
  }
  return r;
}

double predict(int n, const GreenCharacteristics& chars, Variant variant) {
  const PredictionRecord r = predict(n, chars);
  if (variant == Variant::theorem) return r.L_theorem;
  if (!r.L_refined) {
    throw DomainError("predict: refined route needs a_n > 0 (n too small for this domain)");
  }
  return *r.L_refined;
}

double theta_orientation_discrepancy(const GreenCharacteristics& chars) {
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    const double ph = phase(n, chars);
    const double direct = std::exp(ring::green_DC_at_measure(chars, ph));
    worst = std::max(worst, std::abs(theta_ratio_at_phase(chars, ph) / direct - 1.0));
  }
  return worst;
}

double symmetric_reference(int m, double A) {
  if (!(A > 1.0) || m < 0) throw DomainError("symmetric_reference: need A > 1 and m >= 0");
  return std::sqrt(2.0 / kPi) * (A - 1.0) / std::sqrt(A) / std::sqrt(2.0 * m + 1.0) *
         std::pow((A - 1.0) / (A + 1.0), m);
}

double degenerate_reference(int n, double A) {
  if (!(A > 1.0) || n < 0) throw DomainError("degenerate_reference: need A > 1 and n >= 0");
  const double y = 1.0 + 4.0 / (A - 1.0);
  return 2.0 / (std::cosh(n * std::acosh(y)) + 1.0);
}

}  // namespace twogap::predictor
