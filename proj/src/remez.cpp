#include "twogap/remez.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "twogap/errors.hpp"

namespace twogap::remez {
namespace {

constexpr int kMaxIterations = 200;
constexpr int kStagnationLimit = 20;

struct Piece {
  Real lo;
  Real hi;
  int target;  // value of sgn on the piece
  bool single_point;
};

struct Candidate {
  Real x;
  Real e;  // P(x) - sgn(x)
};

std::vector<Piece> pieces_of(const TwoIntervalDomain& d) {
  std::vector<Piece> out;
  out.push_back({Real(-d.A), Real(-1), -1, false});
  out.push_back({Real(1), Real(d.B), +1, d.degenerate()});
  return out;
}

// `count` arcsine-distributed points on [lo, hi], endpoints included.
std::vector<Real> arcsine_grid(const Real& lo, const Real& hi, int count) {
  std::vector<Real> grid;
  grid.reserve(count);
  const Real mid = (lo + hi) / Real(2);
  const Real half = (hi - lo) / Real(2);
  const Real step = mp::pi() / Real(count - 1);
  for (int i = 0; i < count; ++i) {
    if (i == 0) {
      grid.push_back(lo);
    } else if (i == count - 1) {
      grid.push_back(hi);
    } else {
      grid.push_back(mid - half * mp::cos(step * Real(i)));
    }
  }
  return grid;
}

int scan_resolution(int n) { return std::max(20 * n, 512); }

Real chebyshev_argument(const ChebPoly& p, const Real& x) {
  return (Real(2) * x - Real(p.lower + p.upper)) / Real(p.upper - p.lower);
}

// Safeguarded Newton for a simple root of f = dp bracketed by [lo, hi].
Real polish_root(const ChebPoly& dp, const ChebPoly& d2p, Real lo, Real hi, const Real& eps) {
  Real flo = dp(lo);
  Real x = (lo + hi) / Real(2);
  for (int it = 0; it < 400; ++it) {
    const Real fx = dp(x);
    if (fx.is_zero()) return x;
    if (fx.sign() == flo.sign()) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const Real slope = d2p(x);
    Real next = (lo + hi) / Real(2);
    if (!slope.is_zero()) {
      const Real newton = x - fx / slope;
      if (newton > lo && newton < hi) next = newton;
    }
    const Real step = mp::abs(next - x);
    x = next;
    if (step <= eps || hi - lo <= eps) break;
  }
  return x;
}

bool all_zero(const ChebPoly& p) {
  return std::all_of(p.coefficients.begin(), p.coefficients.end(),
                     [](const Real& c) { return c.is_zero(); });
}

class Oracle {
 public:
  Oracle(const TwoIntervalDomain& domain, int n)
      : domain_(domain), n_(n), pieces_(pieces_of(domain)) {
    for (const Piece& piece : pieces_) {
      grids_.push_back(piece.single_point ? std::vector<Real>{piece.lo}
                                          : arcsine_grid(piece.lo, piece.hi, scan_resolution(n)));
    }
    root_eps_ = mp::pow10_neg(mp::ScopedPrecision::current_digits()) * Real(domain.A + domain.B);
  }

  // All local extrema of P - sgn on the set, endpoints included, ordered by x.
  std::vector<Candidate> extrema(const ChebPoly& p) const {
    const ChebPoly dp = p.derivative();
    const ChebPoly d2p = dp.derivative();
    const bool flat = all_zero(dp);
    std::vector<Candidate> out;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      const Piece& piece = pieces_[k];
      auto push = [&](const Real& x) { out.push_back({x, p(x) - Real(piece.target)}); };
      push(piece.lo);
      if (piece.single_point) continue;
      if (!flat) {
        const std::vector<Real>& grid = grids_[k];
        Real prev = dp(grid.front());
        for (std::size_t i = 1; i < grid.size(); ++i) {
          const Real cur = dp(grid[i]);
          if (cur.is_zero() && i + 1 < grid.size()) {
            push(grid[i]);
          } else if (prev.sign() * cur.sign() < 0) {
            push(polish_root(dp, d2p, grid[i - 1], grid[i], root_eps_));
          }
          prev = cur;
        }
      }
      push(piece.hi);
    }
    return out;
  }

  std::vector<Real> initial_reference() const {
    int left = n_ + 1;
    if (!domain_.degenerate()) {
      const double alpha = domain_chars::right_branch_integral(domain_, 1.0) /
                           domain_chars::gap_period(domain_);
      left = static_cast<int>(std::lround(alpha * (n_ + 2)));
      left = std::clamp(left, 1, n_ + 1);
    }
    const int right = n_ + 2 - left;
    std::vector<Real> ref = chebyshev_points(pieces_[0], left);
    for (Real& x : chebyshev_points(pieces_[1], right)) ref.push_back(std::move(x));
    return ref;
  }

  // Solve sum_k c_k T_k(x_j) + (-1)^j E = sgn(x_j) for c and E.
  std::pair<ChebPoly, Real> levelled_solve(const std::vector<Real>& ref) const {
    const int size = n_ + 2;
    std::vector<std::vector<Real>> a(size, std::vector<Real>(size + 1));
    ChebPoly shape{-domain_.A, domain_.B, {}};
    for (int j = 0; j < size; ++j) {
      const Real s = chebyshev_argument(shape, ref[j]);
      Real t_prev(1);
      Real t_cur = s;
      for (int k = 0; k <= n_; ++k) {
        if (k == 0) {
          a[j][k] = Real(1);
        } else if (k == 1) {
          a[j][k] = s;
        } else {
          Real t_next = Real(2) * s * t_cur - t_prev;
          t_prev = std::move(t_cur);
          t_cur = std::move(t_next);
          a[j][k] = t_cur;
        }
      }
      a[j][size - 1] = Real(j % 2 == 0 ? 1 : -1);
      a[j][size] = Real(ref[j] < Real(0) ? -1 : 1);
    }
    for (int col = 0; col < size; ++col) {
      int pivot = col;
      for (int r = col + 1; r < size; ++r) {
        if (mp::abs(a[r][col]) > mp::abs(a[pivot][col])) pivot = r;
      }
      if (a[pivot][col].is_zero()) {
        throw PrecisionError("best_approx: singular levelled system; increase digits");
      }
      std::swap(a[col], a[pivot]);
      for (int r = col + 1; r < size; ++r) {
        if (a[r][col].is_zero()) continue;
        const Real factor = a[r][col] / a[col][col];
        for (int c = col; c <= size; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    std::vector<Real> sol(size);
    for (int r = size - 1; r >= 0; --r) {
      Real acc = a[r][size];
      for (int c = r + 1; c < size; ++c) acc -= a[r][c] * sol[c];
      sol[r] = acc / a[r][r];
    }
    Real level = sol.back();
    sol.pop_back();
    shape.coefficients = std::move(sol);
    return {std::move(shape), std::move(level)};
  }

 private:
  static std::vector<Real> chebyshev_points(const Piece& piece, int count) {
    if (count <= 0) return {};
    if (piece.single_point || count == 1) {
      // The inner endpoint (-1 or 1) is always an alternation point.
      return {piece.target < 0 ? piece.hi : piece.lo};
    }
    return arcsine_grid(piece.lo, piece.hi, count);
  }

  TwoIntervalDomain domain_;
  int n_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<Real>> grids_;
  Real root_eps_;
};

// Collapse runs of equal sign to their largest member.
std::vector<Candidate> alternating_merge(const std::vector<Candidate>& cands) {
  std::vector<Candidate> out;
  for (const Candidate& c : cands) {
    if (c.e.is_zero()) continue;
    if (!out.empty() && out.back().e.sign() == c.e.sign()) {
      if (mp::abs(c.e) > mp::abs(out.back().e)) out.back() = c;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Drop ends or adjacent pairs of smallest error until `count` remain.
void reduce_to(std::vector<Candidate>& seq, std::size_t count) {
  while (seq.size() > count) {
    const std::size_t excess = seq.size() - count;
    Real best = mp::abs(seq.front().e);
    std::size_t drop_at = 0;
    std::size_t drop_len = 1;
    if (mp::abs(seq.back().e) < best) {
      best = mp::abs(seq.back().e);
      drop_at = seq.size() - 1;
    }
    if (excess >= 2) {
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const Real score = std::max(mp::abs(seq[i].e), mp::abs(seq[i + 1].e));
        if (score < best) {
          best = score;
          drop_at = i;
          drop_len = 2;
        }
      }
    }
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(drop_at),
              seq.begin() + static_cast<std::ptrdiff_t>(drop_at + drop_len));
  }
}

Real max_abs_error(const std::vector<Candidate>& cands) {
  Real worst(0);
  for (const Candidate& c : cands) worst = std::max(worst, mp::abs(c.e));
  return worst;
}

bool is_endpoint(const TwoIntervalDomain& d, const Real& x) {
  const double tol = 1e-10 * (d.A + d.B);
  const double xd = x.to_double();
  for (double e : {-d.A, -1.0, 1.0, d.B}) {
    if (std::abs(xd - e) < tol) return true;
  }
  return false;
}

double verify_default_tol(int digits) { return std::pow(10.0, -(digits / 2)); }

}  // namespace

PrecisionContext PrecisionContext::automatic(const TwoIntervalDomain& domain, int n) {
  validate(domain, true);
  double decay = 0.0;
  if (domain.degenerate()) {
    decay = std::acosh(1.0 + 4.0 / (domain.A - 1.0));
  } else {
    const double C = domain_chars::critical_point(domain);
    decay = domain_chars::green_gap(domain, C, C);
  }
  const int extra = static_cast<int>(std::ceil(std::max(n, 0) * decay / std::numbers::ln10));
  return {std::max(kMinDigits, extra + 30)};
}

char to_char(CaseLabel label) {
  switch (label) {
    case CaseLabel::a: return 'a';
    case CaseLabel::b: return 'b';
    case CaseLabel::c: return 'c';
  }
  return '?';
}

Real ChebPoly::operator()(const Real& x) const {
  if (coefficients.empty()) return Real(0);
  const Real s = chebyshev_argument(*this, x);
  const Real two_s = Real(2) * s;
  Real b1(0);
  Real b2(0);
  for (int k = degree(); k >= 1; --k) {
    Real b0 = coefficients[k] + two_s * b1 - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return coefficients[0] + s * b1 - b2;
}

ChebPoly ChebPoly::derivative() const {
  ChebPoly out{lower, upper, {}};
  const int n = degree();
  if (n <= 0) {
    out.coefficients.assign(1, Real(0));
    return out;
  }
  std::vector<Real> d(n + 1, Real(0));
  for (int k = n; k >= 1; --k) {
    d[k - 1] = (k + 1 <= n ? d[k + 1] : Real(0)) + Real(2 * k) * coefficients[k];
  }
  d[0] /= Real(2);
  d.pop_back();
  const Real scale = Real(2) / Real(upper - lower);
  for (Real& c : d) c *= scale;
  out.coefficients = std::move(d);
  return out;
}

double default_tol(int digits) { return std::pow(10.0, -std::floor(2.0 * digits / 3.0)); }

BestApproxResult best_approx(const TwoIntervalDomain& domain, int n,
                             PrecisionContext precision, std::optional<double> tol) {
  validate(domain, true);
  if (n < 0) throw DomainError("best_approx: n must be non-negative");
  if (precision.digits < kMinDigits) {
    throw DomainError("best_approx: at least 30 digits are required");
  }
  const double rel_tol = tol.value_or(default_tol(precision.digits));
  if (!(rel_tol > 0.0)) throw DomainError("best_approx: tol must be positive");

  mp::ScopedPrecision guard(precision.digits);
  const Oracle oracle(domain, n);
  const std::size_t size = static_cast<std::size_t>(n) + 2;

  std::vector<Real> ref = oracle.initial_reference();
  double best_gap = std::numeric_limits<double>::infinity();
  double last_gap = best_gap;
  int since_best = 0;
  auto bracket_text = [&](double gap) {
    std::ostringstream os;
    os << "; last bracket (upper - lower) / lower = " << gap;
    return os.str();
  };
  for (int it = 1; it <= kMaxIterations; ++it) {
    auto [poly, level] = oracle.levelled_solve(ref);
    const Real lower = mp::abs(level);
    if (lower.is_zero() || !lower.is_finite()) {
      throw PrecisionError("best_approx: levelled error vanished; increase digits");
    }
    const std::vector<Candidate> cands = oracle.extrema(poly);
    const Real upper = max_abs_error(cands);
    std::vector<Candidate> seq = alternating_merge(cands);
    if (seq.size() < size || upper < lower * Real(1.0 - 1e-6)) {
      throw PrecisionError("best_approx: alternation lost at " +
                           std::to_string(precision.digits) + " digits; increase digits");
    }

    if (upper - lower <= Real(rel_tol) * lower) {
      BestApproxResult r;
      r.domain = domain;
      r.n = n;
      r.digits = precision.digits;
      r.poly = std::move(poly);
      r.L = lower;
      r.L_upper = upper;
      r.iterations = it;
      for (std::size_t j = 0; j < ref.size(); ++j) {
        r.reference.push_back({ref[j], (j % 2 == 0) == (level.sign() < 0) ? 1 : -1});
      }
      const Real floor_level = lower * (Real(1) - Real(verify_default_tol(precision.digits)));
      std::vector<Candidate> touching;
      for (const Candidate& c : cands) {
        if (mp::abs(c.e) >= floor_level) touching.push_back(c);
      }
      for (const Candidate& c : alternating_merge(touching)) {
        r.alternation.push_back({c.x, c.e.sign()});
      }
      r.m = static_cast<int>(r.alternation.size());
      r.N = static_cast<int>(std::count_if(
          r.alternation.begin(), r.alternation.end(),
          [&](const AlternationPoint& a) { return is_endpoint(domain, a.x); }));
      r.K = r.m - r.N;
      r.case_label = classify_case(r);
      r.n1 = count_zeros(r, -domain.A, -1.0);
      r.n2 = count_zeros(r, 1.0, domain.B);
      return r;
    }

    // Rounding noise in the levelled solve keeps the bracket from closing;
    // stop once it has not narrowed for a while.
    last_gap = ((upper - lower) / lower).to_double();
    if (last_gap < 0.5 * best_gap) {
      best_gap = last_gap;
      since_best = 0;
    } else if (++since_best >= kStagnationLimit) {
      throw PrecisionError("best_approx: bracket stagnated at " + std::to_string(precision.digits) +
                           " digits; increase digits" + bracket_text(last_gap));
    }

    reduce_to(seq, size);
    std::vector<Real> next;
    next.reserve(size);
    for (const Candidate& c : seq) next.push_back(c.x);
    if (next == ref) {
      throw ConvergenceError("best_approx: reference stalled before the bracket closed" +
                             bracket_text(last_gap));
    }
    ref = std::move(next);
  }
  std::ostringstream msg;
  msg << "best_approx: no convergence in " << kMaxIterations << " exchanges"
      << bracket_text(last_gap);
  throw ConvergenceError(msg.str());
}

std::optional<CaseLabel> classify_case(const BestApproxResult& r) {
  if (r.n < 2) return std::nullopt;
  if (r.m == r.n + 3 && r.N == 4 && r.K == r.n - 1) return CaseLabel::a;
  if (r.m == r.n + 2 && r.N == 3) return CaseLabel::b;
  if (r.m == r.n + 2 && r.N == 4 && r.K == r.n - 2) return CaseLabel::c;
  std::ostringstream msg;
  msg << "classify_case: counts m=" << r.m << " N=" << r.N << " K=" << r.K
      << " match no alternance case for n=" << r.n;
  throw ConvergenceError(msg.str());
}

int count_zeros(const BestApproxResult& result, double lo, double hi) {
  if (!(lo < hi)) return 0;
  mp::ScopedPrecision guard(result.digits);
  const ChebPoly dp = result.poly.derivative();
  if (all_zero(dp)) return 0;
  const ChebPoly d2p = dp.derivative();
  const ChebPoly d3p = d2p.derivative();
  const Real eps = mp::pow10_neg(result.digits) * Real(hi - lo);
  const std::vector<Real> grid =
      arcsine_grid(Real(lo), Real(hi), std::max(40 * result.n, 1024));

  int zeros = 0;
  Real prev = dp(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const Real cur = dp(grid[i]);
    const int s0 = prev.sign();
    const int s1 = cur.sign();
    if (s1 == 0 && i + 1 < grid.size()) {
      ++zeros;
    } else if (s0 * s1 < 0) {
      ++zeros;
    } else if (s0 == s1 && s0 != 0) {
      // Same sign at both ends: a pair of zeros hides in the cell only if P'
      // has an interior extremum of the opposite sign.
      const Real g0 = d2p(grid[i - 1]);
      const Real g1 = d2p(grid[i]);
      if (g0.sign() * g1.sign() < 0) {
        const Real turn = polish_root(d2p, d3p, grid[i - 1], grid[i], eps);
        if (dp(turn).sign() == -s0) zeros += 2;
      }
    }
    prev = cur;
  }
  return zeros;
}

AlternationCertificate verify_alternation(const BestApproxResult& r, double tol) {
  AlternationCertificate cert;
  mp::ScopedPrecision guard(r.digits);
  const Real L = r.L;
  const Real sgn_left(-1);
  auto error_at = [&](const Real& x) { return r.poly(x) - (x < Real(0) ? sgn_left : Real(1)); };

  cert.enough_points = r.alternation.size() >= static_cast<std::size_t>(r.n) + 2;

  cert.signs_alternate = true;
  cert.levels_equal = true;
  for (std::size_t j = 0; j < r.alternation.size(); ++j) {
    const Real e = error_at(r.alternation[j].x);
    if (e.sign() != r.alternation[j].sign) cert.signs_alternate = false;
    if (j > 0 && r.alternation[j].sign != -r.alternation[j - 1].sign) cert.signs_alternate = false;
    if (mp::abs(mp::abs(e) - L) > Real(tol) * L) cert.levels_equal = false;
  }

  Real worst(0);
  const Oracle oracle(r.domain, r.n);
  for (const Candidate& c : oracle.extrema(r.poly)) worst = std::max(worst, mp::abs(c.e));
  for (const Piece& piece : pieces_of(r.domain)) {
    if (piece.single_point) continue;
    for (const Real& x : arcsine_grid(piece.lo, piece.hi, std::max(50 * r.n, 2000))) {
      worst = std::max(worst, mp::abs(error_at(x)));
    }
  }
  cert.margin = (worst / L - Real(1)).to_double();
  cert.globally_bounded = worst <= L * (Real(1) + Real(tol));

  std::string failure;
  auto note = [&](bool ok, const char* what) {
    if (ok) return;
    if (!failure.empty()) failure += ", ";
    failure += what;
  };
  note(cert.enough_points, "fewer than n+2 alternation points");
  note(cert.signs_alternate, "signs do not alternate");
  note(cert.levels_equal, "alternation levels differ from L");
  note(cert.globally_bounded, "global bound |P - sgn| <= L violated");
  cert.failure = failure;
  return cert;
}

}  // namespace twogap::remez
