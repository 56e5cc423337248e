#pragma once

#include "twogap/quadrature.hpp"

namespace twogap {

/// The set [-A, -1] U [1, B]. B == 1 is the degenerate singleton right part.
struct TwoIntervalDomain {
  double A;
  double B;

  bool degenerate() const noexcept { return B == 1.0; }
};

/// Throws DomainError unless A > 1 and B >= 1 (B > 1 when !allow_degenerate).
void validate(const TwoIntervalDomain& domain, bool allow_degenerate = false);

/// Conformal characteristics of the complement of [-A,-1] U [1,B].
struct GreenCharacteristics {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;       // critical point of G(., inf) in the gap
  double eta = 0.0;     // G(C, inf)
  double eta1 = 0.0;    // -G''(C)/2
  double eta2 = 0.0;    // Robin constant of G(., C); set by ring::robin_constant
  double alpha = 0.0;   // harmonic measure of [-A,-1] at infinity
  double omegaC = 0.0;  // harmonic measure of [-A,-1] at C
  double p = 0.0;       // rectangle width, tau = i p
  double rho = 0.0;     // exp(-pi / p)
  double c0_abs = 0.0;  // integral of ((1-t^2)(t+A)(B-t))^-1/2 over the gap

  TwoIntervalDomain domain() const noexcept { return {A, B}; }
};

namespace domain_chars {

using quadrature::kDefaultTol;

/// Integral over (-1, 1) of ((1-t^2)(t+A)(B-t))^-1/2.
double gap_period(const TwoIntervalDomain& domain, double tol = kDefaultTol);

double critical_point(const TwoIntervalDomain& domain, double tol = kDefaultTol);

/// G(x, inf) for x in the gap, given the critical point C.
double green_gap(const TwoIntervalDomain& domain, double C, double x,
                 double tol = kDefaultTol);

double eta1(const TwoIntervalDomain& domain, double C);

/// Harmonic measure of [-A,-1] on the boundary circuit B -> +inf -> -inf -> -A.
/// Accepts x >= B, x <= -A, or +-inf (both denote the point at infinity).
double harmonic_measure(const TwoIntervalDomain& domain, double x, double tol = kDefaultTol);

/// Same function on the gap: 1 at -1, 0 at 1.
double harmonic_measure_gap(const TwoIntervalDomain& domain, double x,
                            double tol = kDefaultTol);

/// Circuit parametrisation used by the D_n solver. `u` in [0, 1] runs over
/// [B, inf) as t = B + u/(1-u) (right) or (-inf, -A] as t = -A - u/(1-u) (left).
/// Returns the unnormalised integral from the finite endpoint to t.
double right_branch_integral(const TwoIntervalDomain& domain, double u,
                             double tol = kDefaultTol);
double left_branch_integral(const TwoIntervalDomain& domain, double u,
                            double tol = kDefaultTol);

double modulus_p(const TwoIntervalDomain& domain, double tol = kDefaultTol);

/// All characteristics except eta2 (left at 0).
GreenCharacteristics characteristics(const TwoIntervalDomain& domain,
                                     double tol = kDefaultTol);

}  // namespace domain_chars
}  // namespace twogap
