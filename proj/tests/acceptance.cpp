// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "twogap/domain.hpp"
#include "twogap/predictor.hpp"
#include "twogap/remez.hpp"
#include "twogap/ring_green.hpp"
#include "twogap/theta.hpp"

using namespace twogap;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double elliptic_K(double k) {
  double a = 1.0;
  double b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 60 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return M_PI / (2.0 * a);
}

// Oracle sweep on (2, 3) shared by criteria 6, 8 and 9.
struct SweepPoint {
  double L;
  int n1;
};

const std::map<int, SweepPoint>& sweep_2_3() {
  static const std::map<int, SweepPoint> points = [] {
    std::map<int, SweepPoint> out;
    const TwoIntervalDomain d{2.0, 3.0};
    for (int n = 10; n <= 40; ++n) {
      const int digits = std::max(60, remez::PrecisionContext::automatic(d, n).digits);
      const remez::BestApproxResult r = remez::best_approx(d, n, remez::PrecisionContext{digits});
      out[n] = {r.L.to_double(), r.n1};
    }
    return out;
  }();
  return points;
}

}  // namespace

int main() {
  criterion(1, "symmetric closed forms", [] {
    double worst_eta = 0.0;
    double worst_pos = 0.0;
    for (double A : {1.5, 2.0, 5.0}) {
      const GreenCharacteristics c = ring::complete_characteristics({A, A});
      worst_eta = std::max({worst_eta, rel(c.eta, 0.5 * std::log((A + 1) / (A - 1))),
                            rel(c.eta1, 1.0 / (2 * A)),
                            rel(c.eta2, std::log(2 * A / std::sqrt(A * A - 1)))});
      worst_pos = std::max({worst_pos, std::abs(c.C), std::abs(c.alpha - 0.5),
                            std::abs(c.omegaC - 0.5)});
    }
    return Outcome{worst_eta < 1e-8 && worst_pos < 1e-10,
                   "max rel err eta/eta1/eta2 " + fmt("%.2e", worst_eta) +
                       ", max abs err C/alpha/omegaC " + fmt("%.2e", worst_pos)};
  });

  criterion(2, "theta identity anchor", [] {
    const GreenCharacteristics c = ring::complete_characteristics({2.0, 2.0});
    const theta::ThetaParams tp{predictor::nome(c)};
    const double raw = theta::theta0(0.0, tp) / theta::theta0(0.5, tp);
    const double corrected = predictor::theta_ratio(6, c);
    const double e1 = std::abs(raw - std::exp(-c.eta));
    const double e2 = std::abs(corrected - std::sqrt(3.0));
    return Outcome{e1 < 1e-6 && e2 < 1e-6 && std::abs(raw - 0.5773503) < 1e-6,
                   "raw " + fmt("%.7f", raw) + ", corrected even-n " + fmt("%.7f", corrected)};
  });

  criterion(3, "route equivalence (2,3), n=1..50", [] {
    const GreenCharacteristics c = ring::complete_characteristics({2.0, 3.0});
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
      const double D = predictor::solve_Dn(c, predictor::phase(n, c));
      worst = std::max(worst, rel(std::exp(ring::green_DC(c, D)), predictor::theta_ratio(n, c)));
    }
    return Outcome{worst < 1e-8, "max rel gap " + fmt("%.2e", worst)};
  });

  criterion(4, "degenerate oracle A=3, B=1, n=0..10", [] {
    double worst = 0.0;
    mp::ScopedPrecision guard(40);
    for (int n = 0; n <= 10; ++n) {
      const remez::BestApproxResult r =
          remez::best_approx({3.0, 1.0}, n, remez::PrecisionContext{40});
      mp::Real t0(1);
      mp::Real t1(3);
      if (n == 0) t1 = t0;
      for (int k = 2; k <= n; ++k) {
        mp::Real t2 = mp::Real(6) * t1 - t0;
        t0 = t1;
        t1 = t2;
      }
      const mp::Real exact = mp::Real(2) / (t1 + mp::Real(1));
      worst = std::max(worst, mp::abs(r.L - exact).to_double());
    }
    return Outcome{worst < 1e-20, "max abs err " + fmt("%.2e", worst)};
  });

  criterion(5, "parity identity A=B=2, m=1..8", [] {
    double worst = 0.0;
    const TwoIntervalDomain d{2.0, 2.0};
    for (int m = 1; m <= 8; ++m) {
      const auto odd = remez::best_approx(d, 2 * m + 1, remez::PrecisionContext::automatic(d, 2 * m + 1));
      const auto even = remez::best_approx(d, 2 * m + 2, remez::PrecisionContext::automatic(d, 2 * m + 2));
      mp::ScopedPrecision guard(std::max(odd.digits, even.digits));
      worst = std::max(worst, (mp::abs(odd.L - even.L) / even.L).to_double());
    }
    return Outcome{worst < 1e-20, "max rel diff " + fmt("%.2e", worst)};
  });

  criterion(6, "main-theorem convergence (2,3)", [] {
    const GreenCharacteristics c = ring::complete_characteristics({2.0, 3.0});
    const auto& pts = sweep_2_3();
    std::map<int, double> dev;
    for (int n = 15; n <= 40; ++n) {
      dev[n] = std::abs(pts.at(n).L / predictor::predict(n, c, predictor::Variant::refined) - 1.0);
    }
    double worst_late = 0.0;
    for (int n = 25; n <= 40; ++n) worst_late = std::max(worst_late, dev[n]);
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 15; n + 5 <= 40; ++n) {
      double w = 0.0;
      for (int k = n; k <= n + 5; ++k) w = std::max(w, dev[k]);
      if (w > prev) monotone = false;
      prev = w;
    }
    return Outcome{worst_late < 0.1 && monotone,
                   "max |r-1| on [25,40] " + fmt("%.4f", worst_late) +
                       (monotone ? ", windowed max non-increasing" : ", windowed max increases")};
  });

  criterion(7, "symmetric limit A=2, m=12..15", [] {
    const TwoIntervalDomain d{2.0, 2.0};
    const double target = std::sqrt(2.0 / M_PI);
    double worst = 0.0;
    for (int m = 12; m <= 15; ++m) {
      const int n = 2 * m + 1;
      const auto r = remez::best_approx(d, n, remez::PrecisionContext::automatic(d, n));
      const double scaled = std::sqrt(double(n)) * std::pow(3.0, m) * std::sqrt(2.0) * r.L.to_double();
      worst = std::max(worst, rel(scaled, target));
    }
    return Outcome{worst < 0.05, "max rel dist to sqrt(2/pi) " + fmt("%.4f", worst)};
  });

  criterion(8, "oscillation tracking (2,3), n=25..40", [] {
    const GreenCharacteristics c = ring::complete_characteristics({2.0, 3.0});
    const double cc = predictor::theorem_constant(c);
    const auto& pts = sweep_2_3();
    double worst = 0.0;
    double omin = 1e300, omax = 0.0, pmin = 1e300, pmax = 0.0;
    for (int n = 25; n <= 40; ++n) {
      const double observed = std::sqrt(double(n)) * std::exp(n * c.eta) * pts.at(n).L;
      const double predicted = cc * predictor::theta_ratio(n, c);
      worst = std::max(worst, rel(observed, predicted));
      omin = std::min(omin, observed);
      omax = std::max(omax, observed);
      pmin = std::min(pmin, predicted);
      pmax = std::max(pmax, predicted);
    }
    const bool varies = omax / omin > 1.05 && pmax / pmin > 1.05;
    return Outcome{worst < 0.15 && varies,
                   "max rel gap " + fmt("%.4f", worst) + ", oracle max/min " +
                       fmt("%.3f", omax / omin) + ", predicted max/min " + fmt("%.3f", pmax / pmin)};
  });

  criterion(9, "zero-count law (2,3), n=10..40", [] {
    const GreenCharacteristics c = ring::complete_characteristics({2.0, 3.0});
    double worst = 0.0;
    for (const auto& [n, pt] : sweep_2_3()) worst = std::max(worst, std::abs(pt.n1 - n * c.alpha));
    return Outcome{worst <= 2.0, "max |n1 - n alpha| " + fmt("%.3f", worst)};
  });

  criterion(10, "small-n grid cross-validation", [] {
    double worst = 0.0;
    for (const TwoIntervalDomain d : {TwoIntervalDomain{2, 2}, TwoIntervalDomain{2, 3},
                                      TwoIntervalDomain{3, 1.5}}) {
      for (int n = 0; n <= 8; ++n) {
        const double exact = remez::best_approx(d, n, remez::PrecisionContext{40}).L.to_double();
        worst = std::max(worst, rel(remez::grid_reference(d, n), exact));
      }
    }
    return Outcome{worst < 1e-7, "max rel diff " + fmt("%.2e", worst)};
  });

  criterion(11, "quadrature anchor |c0| (A=B=2) = K(1/2)", [] {
    const double c0 = domain_chars::gap_period({2.0, 2.0});
    const double k = elliptic_K(0.5);
    const double err = std::abs(c0 - k);
    return Outcome{err < 1e-11 && std::abs(k - 1.6857503548) < 1e-10,
                   fmt("%.12f", c0) + " vs AGM " + fmt("%.12f", k)};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
