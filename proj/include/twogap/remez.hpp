#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twogap/domain.hpp"
#include "twogap/mp_real.hpp"

namespace twogap::remez {

using mp::Real;

/// Decimal digits for all extended-precision arithmetic of one oracle run.
struct PrecisionContext {
  int digits = 40;

  /// ceil(n * decay / ln 10) + 30, where decay is eta (or acosh(1 + 4/(A-1))
  /// for the degenerate B = 1 domain).
  static PrecisionContext automatic(const TwoIntervalDomain& domain, int n);
};

inline constexpr int kMinDigits = 30;

/// Polynomial in the Chebyshev basis of [lower, upper] = [-A, B].
struct ChebPoly {
  double lower = -1.0;
  double upper = 1.0;
  std::vector<Real> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  Real operator()(const Real& x) const;
  /// Coefficients of d/dx in the same basis.
  ChebPoly derivative() const;
};

enum class CaseLabel { a, b, c };

char to_char(CaseLabel label);

struct AlternationPoint {
  Real x;
  int sign;  // sign of P(x) - sgn(x)
};

struct BestApproxResult {
  TwoIntervalDomain domain{};
  int n = 0;
  int digits = 0;
  ChebPoly poly;
  Real L;          // levelled error of the final reference
  Real L_upper;    // max |P - sgn| over the set; L <= L_true <= L_upper
  std::vector<AlternationPoint> reference;    // final n + 2 point reference
  std::vector<AlternationPoint> alternation;  // maximal alternating set at level L
  int m = 0;  // alternation count
  int K = 0;  // critical alternation points
  int N = 0;  // endpoint alternation points
  std::optional<CaseLabel> case_label;  // unset for n < 2
  int n1 = 0;  // critical points of P in [-A, -1]
  int n2 = 0;  // critical points of P in [1, B]
  int iterations = 0;
};

/// Default relative tolerance for a given precision: 10^-floor(2 digits / 3).
double default_tol(int digits);

/// Minimax polynomial of degree <= n for sgn on [-A,-1] U [1,B] by
/// multi-point Remez exchange. Throws ConvergenceError on stagnation and
/// PrecisionError when the working precision cannot resolve the alternation.
BestApproxResult best_approx(const TwoIntervalDomain& domain, int n,
                             PrecisionContext precision, std::optional<double> tol = {});

struct AlternationCertificate {
  bool signs_alternate = false;
  bool levels_equal = false;
  bool globally_bounded = false;
  bool enough_points = false;
  double margin = 0.0;  // max |P - sgn| / L - 1 on the dense scan
  std::string failure;  // empty when passed

  bool passed() const noexcept { return failure.empty(); }
};

AlternationCertificate verify_alternation(const BestApproxResult& result, double tol);

/// Case a, b or c from the alternation counts. Returns nullopt for n < 2;
/// throws ConvergenceError when the counts match no case.
std::optional<CaseLabel> classify_case(const BestApproxResult& result);

/// Number of zeros of P' in [lo, hi].
int count_zeros(const BestApproxResult& result, double lo, double hi);

/// Independent low-degree check in long double: discrete minimax on an
/// arcsine grid of `grid_size` points per interval, locally refined near the
/// extremal points. Requires n <= 10.
double grid_reference(const TwoIntervalDomain& domain, int n, int grid_size = 4000);

}  // namespace twogap::remez
