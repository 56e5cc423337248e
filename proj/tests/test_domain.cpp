#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "twogap/domain.hpp"
#include "twogap/errors.hpp"

using namespace twogap;
using namespace twogap::domain_chars;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("validate rejects bad domains") {
  CHECK_THROWS_AS(validate({1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(validate({2.0, 1.0}), DomainError);
  CHECK_NOTHROW(validate({2.0, 1.0}, true));
  CHECK_THROWS_AS(validate({2.0, 0.5}, true), DomainError);
  CHECK_THROWS_AS(characteristics({0.5, 3.0}), DomainError);
}

TEST_CASE("gap_period matches the elliptic oracle") {
  CHECK(gap_period({2.0, 2.0}) == doctest::Approx(oracle::elliptic_K(0.5)).epsilon(1e-12));
  const double ref = oracle::arcsine_weighted(
      [](double x) { return 1.0 / std::sqrt((x + 2.0) * (3.0 - x)); });
  CHECK(gap_period({2.0, 3.0}) == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("critical_point") {
  CHECK(std::abs(critical_point({2.0, 2.0})) < 1e-12);
  CHECK(std::abs(critical_point({3.0, 3.0})) < 1e-12);
  const double c = critical_point({2.0, 3.0});
  CHECK(c < 0.0);
  CHECK(c > -1.0);
  CHECK(c == doctest::Approx(oracle::critical_point(2.0, 3.0)).epsilon(1e-10));
  CHECK(critical_point({3.0, 1.5}) == doctest::Approx(oracle::critical_point(3.0, 1.5)).epsilon(1e-10));
}

TEST_CASE("green_gap values") {
  const TwoIntervalDomain d{2.0, 2.0};
  CHECK(green_gap(d, 0.0, 0.0) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-13));
  CHECK(std::abs(green_gap(d, 0.0, -1.0 + 1e-12)) < 1e-5);
  CHECK(std::abs(green_gap(d, 0.0, 1.0 - 1e-12)) < 1e-5);
  CHECK_THROWS_AS(green_gap(d, 0.0, 1.5), DomainError);

  // Independent route: G(x) = integral from -1 to x of (C - t) w(t) dt.
  const TwoIntervalDomain e{2.0, 3.0};
  const double C = critical_point(e);
  const double x = 0.3;
  const double ref = oracle::adaptive(
      [&](double th) {
        const double t = -std::cos(th);
        return (C - t) / std::sqrt((t + 2.0) * (3.0 - t));
      },
      0.0, std::acos(-x));
  CHECK(green_gap(e, C, x) == doctest::Approx(std::abs(ref)).epsilon(1e-10));
}

TEST_CASE("eta1 closed forms and curvature") {
  CHECK(eta1({2.0, 2.0}, 0.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(eta1({5.0, 5.0}, 0.0) == doctest::Approx(0.1).epsilon(1e-14));

  const TwoIntervalDomain d{2.0, 3.0};
  const double C = critical_point(d);
  auto G = [&](double x) { return green_gap(d, C, x); };
  const double d1 = oracle::second_difference(G, C, 1e-3);
  const double d2 = oracle::second_difference(G, C, 5e-4);
  const double rich = (4.0 * d2 - d1) / 3.0;
  CHECK(-0.5 * rich == doctest::Approx(eta1(d, C)).epsilon(1e-6));
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-5));
}

TEST_CASE("harmonic_measure on the circuit") {
  const TwoIntervalDomain d{2.0, 3.0};
  CHECK(std::abs(harmonic_measure(d, 3.0)) < 1e-14);
  CHECK(harmonic_measure(d, -2.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(harmonic_measure({2.0, 2.0}, kInf) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(harmonic_measure(d, kInf) == doctest::Approx(harmonic_measure(d, -kInf)).epsilon(1e-14));
  CHECK_THROWS_AS(harmonic_measure(d, 0.0), DomainError);

  // Monotone along B -> +inf -> -inf -> -A.
  const double pts[] = {3.0, 4.0, 10.0, 1e3, kInf, -1e3, -10.0, -3.0, -2.0};
  double prev = -1.0;
  for (double x : pts) {
    const double w = harmonic_measure(d, x);
    CHECK(w >= prev);
    prev = w;
  }
}

TEST_CASE("harmonic_measure_gap") {
  const TwoIntervalDomain d{2.0, 2.0};
  CHECK(harmonic_measure_gap(d, 0.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(harmonic_measure_gap(d, 1.0 - 1e-12) < 1e-5);
  CHECK(harmonic_measure_gap(d, -1.0 + 1e-12) > 1.0 - 1e-5);
}

TEST_CASE("modulus_p against the AGM oracle") {
  const double ref = oracle::elliptic_K(std::sqrt(3.0) / 2.0) / (2.0 * oracle::elliptic_K(0.5));
  CHECK(modulus_p({2.0, 2.0}) == doctest::Approx(ref).epsilon(1e-11));
  CHECK(modulus_p({2.0, 2.0}) == doctest::Approx(0.6396308).epsilon(1e-7));
  CHECK(modulus_p({2.0, 3.0}) > 0.0);

  // A = B: with x = sin(theta) the gap and tail integrals become complete
  // elliptic integrals of moduli 1/A and sqrt(1 - 1/A^2).
  const double A = 5.0;
  const double k = 1.0 / A;
  const double kp = std::sqrt(1.0 - k * k);
  CHECK(modulus_p({A, A}) == doctest::Approx(0.5 * oracle::elliptic_K(kp) / oracle::elliptic_K(k)).epsilon(1e-11));
}

TEST_CASE("characteristics invariants") {
  const GreenCharacteristics s = characteristics({2.0, 2.0});
  CHECK(std::abs(s.C) < 1e-12);
  CHECK(s.eta == doctest::Approx(0.5493061443340549).epsilon(1e-12));
  CHECK(s.eta1 == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(s.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.omegaC == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.rho == doctest::Approx(std::exp(-oracle::kPi / s.p)).epsilon(1e-14));
  CHECK(s.rho == doctest::Approx(0.0073609).epsilon(1e-4));

  const GreenCharacteristics g = characteristics({2.0, 3.0});
  CHECK(g.C < 0.0);
  CHECK(g.eta > 0.0);
  CHECK(g.eta1 > 0.0);
  CHECK(g.alpha > 0.0);
  CHECK(g.alpha < 1.0);
  CHECK(g.omegaC > 0.0);
  CHECK(g.omegaC < 1.0);
  CHECK(g.p > 0.0);
  CHECK(g.rho > 0.0);
  CHECK(g.rho < 1.0);
  CHECK(g.c0_abs == doctest::Approx(gap_period({2.0, 3.0})).epsilon(1e-14));

  CHECK(characteristics({1.5, 1.5}).eta == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-12));
}
