#pragma once

namespace twogap::theta {

/// Nome h = exp(i pi tau) of a purely imaginary tau, with series tolerance.
struct ThetaParams {
  double h;
  double tol = 1e-14;
};

/// Number of cosine terms kept: ceil(sqrt(ln(tol/2) / ln h)).
int term_count(const ThetaParams& params);

/// theta_0(t | tau) = 1 + 2 sum_{k>=1} (-1)^k h^{k^2} cos(2 pi k t).
double theta0(double t, const ThetaParams& params);

}  // namespace twogap::theta
