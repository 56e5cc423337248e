#include "twogap/ring_green.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "twogap/errors.hpp"

namespace twogap::ring {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// ln|(1 - x) prod_{k>=1} (1 - rho^{2k} x)(1 - rho^{2k}/x)|.
double log_abs_ring_product(double rho, cplx x, double tol) {
  double acc = std::log(std::abs(1.0 - x));
  const double q = rho * rho;
  const double reach = std::max(std::abs(x), 1.0 / std::abs(x));
  double qk = q;
  for (int k = 1; k < 200 && qk * reach > tol * 1e-3; ++k, qk *= q) {
    acc += std::log(std::abs(1.0 - qk * x)) + std::log(std::abs(1.0 - qk / x));
  }
  return acc;
}

void require_ring(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("ring: rho must lie in (0, 1)");
}

}  // namespace

RectanglePoint rect_map(const GreenCharacteristics& chars, double z, double tol) {
  const TwoIntervalDomain d = chars.domain();
  const double A = d.A;
  const double B = d.B;
  if (std::isinf(z) || z >= B || z <= -A) {
    return {chars.p, domain_chars::harmonic_measure(d, z, tol)};
  }
  if (z > -1.0 && z < 1.0) return {0.0, domain_chars::harmonic_measure_gap(d, z, tol)};

  using quadrature::integrate_singular;
  if (z >= 1.0) {
    // Bottom edge: u = (1/|c0|) * integral over [1, z] of ((t^2-1)(t+A)(B-t))^-1/2.
    if (z == 1.0) return {0.0, 0.0};
    const double mid = 0.5 * (1.0 + B);
    if (z <= mid) {
      auto f = [&](double t) { return 1.0 / std::sqrt((t + 1.0) * (t + A) * (B - t)); };
      return {integrate_singular(f, {1.0, z, -0.5, 0.0}, tol) / chars.c0_abs, 0.0};
    }
    auto f = [&](double t) { return 1.0 / std::sqrt((t * t - 1.0) * (t + A)); };
    return {chars.p - integrate_singular(f, {z, B, 0.0, -0.5}, tol) / chars.c0_abs, 0.0};
  }
  // Top edge [-A, -1]: u runs from p at -A down to 0 at -1.
  if (z == -1.0) return {0.0, 1.0};
  const double mid = -0.5 * (1.0 + A);
  if (z >= mid) {
    auto f = [&](double t) { return 1.0 / std::sqrt((1.0 - t) * (t + A) * (B - t)); };
    return {integrate_singular(f, {z, -1.0, 0.0, -0.5}, tol) / chars.c0_abs, 1.0};
  }
  auto f = [&](double t) { return 1.0 / std::sqrt((t * t - 1.0) * (B - t)); };
  return {chars.p - integrate_singular(f, {-A, z, -0.5, 0.0}, tol) / chars.c0_abs, 1.0};
}

RingPoint to_ring(const GreenCharacteristics& chars, RectanglePoint point) {
  const double k = kPi / chars.p;
  return {std::exp(-k * point.v), std::remainder(-k * point.u, 2.0 * kPi)};
}

double ring_green(double rho, RingPoint w, RingPoint c, double tol) {
  require_ring(rho);
  const double a = c.modulus;
  if (c.argument != 0.0 || !(a > rho && a < 1.0)) {
    throw DomainError("ring_green: pole must be real and inside (rho, 1)");
  }
  constexpr double slack = 1e-12;
  if (!(w.modulus <= 1.0 + slack && w.modulus >= rho * (1.0 - slack))) {
    throw DomainError("ring_green: point outside the closed ring");
  }
  const cplx z = std::polar(w.modulus, w.argument);
  if (z == cplx(a, 0.0)) throw DomainError("ring_green: evaluation at the pole");

  const double log_a = std::log(a);
  return log_abs_ring_product(rho, z * a, tol) - log_abs_ring_product(rho, z / a, tol) -
         log_a + (log_a / std::log(rho)) * std::log(w.modulus);
}

double ring_robin(double rho, double c, double tol) {
  require_ring(rho);
  if (!(c > rho && c < 1.0)) throw DomainError("ring_robin: pole must lie in (rho, 1)");
  // At w = c the factor (1 - w/c) of the pole product is divided out, leaving
  // prod (1 - rho^{2k})^2.
  double tail = 0.0;
  const double q = rho * rho;
  double qk = q;
  for (int k = 1; k < 200 && qk > tol * 1e-3; ++k, qk *= q) tail += 2.0 * std::log1p(-qk);
  const double log_c = std::log(c);
  return log_abs_ring_product(rho, cplx(c * c, 0.0), tol) - tail + log_c * log_c / std::log(rho);
}

double ring_robin_numeric(double rho, double c, double eps) {
  auto sided = [&](double e) {
    const double w = c * (1.0 + e);
    return ring_green(rho, {w, 0.0}, {c, 0.0}) + std::log(std::abs(w - c));
  };
  auto symmetric = [&](double e) { return 0.5 * (sided(e) + sided(-e)); };
  return (4.0 * symmetric(0.5 * eps) - symmetric(eps)) / 3.0;
}

double robin_constant(const GreenCharacteristics& chars) {
  const double k = kPi / chars.p;
  const double wC = std::exp(-k * chars.omegaC);
  // |dw/dz| at C: |w| (pi/p) |F'(C)| with |F'(C)| = 2 eta1 / |c0|.
  const double dw = k * (2.0 * chars.eta1 / chars.c0_abs) * wC;
  return ring_robin(chars.rho, wC) - std::log(dw);
}

GreenCharacteristics complete_characteristics(const TwoIntervalDomain& domain, double tol) {
  GreenCharacteristics chars = domain_chars::characteristics(domain, tol);
  chars.eta2 = robin_constant(chars);
  return chars;
}

double green_DC_at_measure(const GreenCharacteristics& chars, double omega_D) {
  if (!(omega_D >= 0.0 && omega_D <= 1.0)) {
    throw DomainError("green_DC: harmonic measure must lie in [0, 1]");
  }
  const double k = kPi / chars.p;
  const RingPoint wD{std::exp(-k * omega_D), kPi};
  const RingPoint wC{std::exp(-k * chars.omegaC), 0.0};
  return ring_green(chars.rho, wD, wC);
}

double green_DC(const GreenCharacteristics& chars, double D, double tol) {
  const TwoIntervalDomain d = chars.domain();
  if (!(std::isinf(D) || D >= d.B || D <= -d.A)) {
    throw DomainError("green_DC: D must lie outside (-A, B)");
  }
  if (D == d.B || D == -d.A) return 0.0;
  return green_DC_at_measure(chars, domain_chars::harmonic_measure(d, D, tol));
}

}  // namespace twogap::ring
