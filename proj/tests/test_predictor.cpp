#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "twogap/domain.hpp"
#include "twogap/errors.hpp"
#include "twogap/predictor.hpp"
#include "twogap/ring_green.hpp"
#include "twogap/theta.hpp"

using namespace twogap;
using namespace twogap::predictor;

namespace {
const GreenCharacteristics& sym2() {
  static const GreenCharacteristics c = ring::complete_characteristics({2.0, 2.0});
  return c;
}
const GreenCharacteristics& asym() {
  static const GreenCharacteristics c = ring::complete_characteristics({2.0, 3.0});
  return c;
}
double frac_dist(double x, double y) {
  const double d = std::abs(x - y);
  return std::min(d, 1.0 - d);
}
}  // namespace

TEST_CASE("phase in the symmetric case") {
  CHECK(frac_dist(phase(5, sym2()), 0.0) < 1e-12);
  CHECK(frac_dist(phase(6, sym2()), 0.5) < 1e-12);
  CHECK(phase(0, asym()) == doctest::Approx(asym().omegaC).epsilon(1e-14));
}

TEST_CASE("solve_Dn") {
  CHECK(solve_Dn(sym2(), 0.0) == 2.0);
  CHECK(std::isinf(solve_Dn(sym2(), sym2().alpha)));
  const double D = solve_Dn(asym(), 1.0 - 1e-9);
  CHECK(D <= -2.0);
  CHECK(D > -2.001);
  for (double ph : {0.1, 0.3, 0.6, 0.9}) {
    const double x = solve_Dn(asym(), ph);
    CHECK(domain_chars::harmonic_measure(asym().domain(), x) == doctest::Approx(ph).epsilon(1e-10));
  }
  CHECK_THROWS_AS(solve_Dn(asym(), 1.0), DomainError);
}

TEST_CASE("theta_ratio orientation") {
  const double h = nome(sym2());
  const theta::ThetaParams tp{h};
  CHECK(theta::theta0(0.0, tp) / theta::theta0(0.5, tp) ==
        doctest::Approx(std::exp(-sym2().eta)).epsilon(1e-6));
  CHECK(theta_ratio(6, sym2()) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-6));
  CHECK(theta_ratio(7, sym2()) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(theta_orientation_discrepancy(asym()) < 1e-8);
}

TEST_CASE("theta_ratio equals exp(G(D_n, C))") {
  for (int n = 1; n <= 20; ++n) {
    const double ph = phase(n, asym());
    const double D = solve_Dn(asym(), ph);
    CHECK(theta_ratio(n, asym()) == doctest::Approx(std::exp(ring::green_DC(asym(), D))).epsilon(1e-8));
  }
}

TEST_CASE("theorem constant and symmetric closed form") {
  for (int m = 1; m <= 6; ++m) {
    const int n = 2 * m + 1;
    const double ref = 1.0 / std::sqrt(oracle::kPi) / std::sqrt(double(n)) * std::pow(3.0, -m);
    CHECK(predict(n, sym2(), Variant::theorem) == doctest::Approx(ref).epsilon(1e-9));
    CHECK(symmetric_reference(m, 2.0) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(symmetric_reference(3, 2.0) == doctest::Approx(1.0 / std::sqrt(oracle::kPi * 7.0) / 27.0).epsilon(1e-14));
}

TEST_CASE("a_n symmetric closed form and growth") {
  const double eta = 0.5 * std::log(3.0);
  for (int m = 1; m <= 4; ++m) {
    const int n = 2 * m + 1;
    // 2 eta / eta1 = 8 eta for A = 2.
    const double ref = eta * n - 0.5 * std::log(8.0 * eta) + std::log(4.0 / std::sqrt(3.0));
    CHECK(a_n(n, sym2()) == doctest::Approx(ref).epsilon(1e-9));
  }
  CHECK(a_n(400, asym()) / 400.0 == doctest::Approx(asym().eta).epsilon(0.01));
}

TEST_CASE("predict record identities") {
  for (int n = 3; n <= 30; ++n) {
    const PredictionRecord r = predict(n, asym());
    REQUIRE(r.L_refined.has_value());
    CHECK(*r.L_refined / r.L_theorem ==
          doctest::Approx(std::sqrt(n * asym().eta / r.a_n)).epsilon(1e-12));
    CHECK(r.theta_ratio * r.theta_ratio_raw == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Parity identity in the symmetric case.
  for (int m = 1; m <= 6; ++m) {
    CHECK(*predict(2 * m + 1, sym2()).L_refined ==
          doctest::Approx(*predict(2 * m + 2, sym2()).L_refined).epsilon(1e-12));
  }
  // Oscillation between consecutive n.
  const PredictionRecord r30 = predict(30, asym());
  const PredictionRecord r31 = predict(31, asym());
  CHECK(std::abs(r30.theta_ratio - r31.theta_ratio) > 1e-3);
}

TEST_CASE("degenerate_reference") {
  CHECK(degenerate_reference(0, 3.0) == doctest::Approx(1.0));
  CHECK(degenerate_reference(1, 3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(degenerate_reference(2, 3.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  for (int n = 0; n <= 10; ++n) {
    CHECK(degenerate_reference(n, 3.0) ==
          doctest::Approx(2.0 / (oracle::chebyshev_T(n, 3.0) + 1.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(degenerate_reference(2, 1.0), DomainError);
}
