#include "twogap/theta.hpp"

#include <cmath>
#include <numbers>

#include "twogap/errors.hpp"

namespace twogap::theta {

int term_count(const ThetaParams& params) {
  if (!(params.h > 0.0 && params.h < 1.0)) throw DomainError("theta0: nome must lie in (0, 1)");
  if (!(params.tol > 0.0 && params.tol < 1.0)) throw DomainError("theta0: tol must lie in (0, 1)");
  return static_cast<int>(std::ceil(std::sqrt(std::log(0.5 * params.tol) / std::log(params.h))));
}

double theta0(double t, const ThetaParams& params) {
  const int terms = term_count(params);
  // cos is even, so theta0(-t) and theta0(t) follow identical arithmetic.
  const double x = 2.0 * std::numbers::pi * std::abs(t);
  double sum = 0.0;
  for (int k = terms; k >= 1; --k) {
    const double term = 2.0 * std::pow(params.h, static_cast<double>(k) * k) * std::cos(k * x);
    sum += (k % 2 == 0) ? term : -term;
  }
  return 1.0 + sum;
}

}  // namespace twogap::theta
