#pragma once

#include "twogap/domain.hpp"

namespace twogap::ring {

/// Point of the rectangle (0, p, p+i, i); v equals the harmonic measure.
struct RectanglePoint {
  double u;
  double v;
};

/// Point of the ring rho <= |w| <= 1 in polar form.
struct RingPoint {
  double modulus;
  double argument = 0.0;
};

/// Boundary image of a real point under the rectangle map F with
/// F(1) = 0, F(B) = p, F(-A) = p + i, F(-1) = i. Accepts every real z and +-inf.
RectanglePoint rect_map(const GreenCharacteristics& chars, double z,
                        double tol = quadrature::kDefaultTol);

/// Ring image w = exp(-(pi/p)(v + i u)) of a rectangle point.
RingPoint to_ring(const GreenCharacteristics& chars, RectanglePoint point);

/// Green function of the ring rho < |w| < 1 with a pole at the real point
/// c.modulus in (rho, 1).
double ring_green(double rho, RingPoint w, RingPoint c, double tol = 1e-15);

/// lim_{w -> c} ring_green(w, c) + ln|w - c|, from the product expansion.
double ring_robin(double rho, double c, double tol = 1e-15);

/// The same limit by Richardson extrapolation of the Green function at
/// w = c(1 + eps), c(1 + eps/2). Used to certify ring_robin.
double ring_robin_numeric(double rho, double c, double eps = 1e-4);

/// Robin constant eta2 of G(z, C) for the two-interval domain.
double robin_constant(const GreenCharacteristics& chars);

/// characteristics() with eta2 filled in.
GreenCharacteristics complete_characteristics(const TwoIntervalDomain& domain,
                                              double tol = quadrature::kDefaultTol);

/// G(D, C) for D on the outer boundary circuit (D >= B, D <= -A, or +-inf).
double green_DC(const GreenCharacteristics& chars, double D,
                double tol = quadrature::kDefaultTol);

/// G(D, C) for the circuit point whose harmonic measure is omega_D.
double green_DC_at_measure(const GreenCharacteristics& chars, double omega_D);

}  // namespace twogap::ring
