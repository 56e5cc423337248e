#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "twogap/errors.hpp"
#include "twogap/remez.hpp"

namespace twogap::remez {
namespace {

using LD = long double;

constexpr int kMaxExchanges = 100;
constexpr int kRefineLevels = 3;
constexpr int kRefinePoints = 64;

struct GridProblem {
  LD center;
  LD half;
  int n;

  std::vector<LD> basis(LD x) const {
    const LD s = (x - center) / half;
    std::vector<LD> t(n + 1);
    t[0] = 1;
    if (n >= 1) t[1] = s;
    for (int k = 2; k <= n; ++k) t[k] = 2 * s * t[k - 1] - t[k - 2];
    return t;
  }

  // Coefficients followed by the level.
  std::vector<LD> solve(const std::vector<LD>& ref) const {
    const int size = n + 2;
    std::vector<std::vector<LD>> a(size, std::vector<LD>(size + 1));
    for (int j = 0; j < size; ++j) {
      const std::vector<LD> t = basis(ref[j]);
      std::copy(t.begin(), t.end(), a[j].begin());
      a[j][size - 1] = (j % 2 == 0) ? 1 : -1;
      a[j][size] = ref[j] < 0 ? -1 : 1;
    }
    for (int col = 0; col < size; ++col) {
      int piv = col;
      for (int r = col + 1; r < size; ++r) {
        if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
      }
      if (a[piv][col] == 0) throw ConvergenceError("grid_reference: singular system");
      std::swap(a[col], a[piv]);
      for (int r = col + 1; r < size; ++r) {
        const LD f = a[r][col] / a[col][col];
        for (int c = col; c <= size; ++c) a[r][c] -= f * a[col][c];
      }
    }
    std::vector<LD> x(size);
    for (int r = size - 1; r >= 0; --r) {
      LD acc = a[r][size];
      for (int c = r + 1; c < size; ++c) acc -= a[r][c] * x[c];
      x[r] = acc / a[r][r];
    }
    return x;
  }

  LD error(const std::vector<LD>& sol, LD x) const {
    const std::vector<LD> t = basis(x);
    LD p = 0;
    for (int k = 0; k <= n; ++k) p += sol[k] * t[k];
    return p - (x < 0 ? -1 : 1);
  }
};

struct Extremum {
  LD x;
  LD e;
};

std::vector<LD> arcsine(LD lo, LD hi, int count) {
  std::vector<LD> out(count);
  const LD mid = (lo + hi) / 2;
  const LD half = (hi - lo) / 2;
  for (int i = 0; i < count; ++i) {
    out[i] = mid - half * std::cos(std::numbers::pi_v<LD> * i / (count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

// Largest-|e| member of each constant-sign run, then one per sign alternation.
std::vector<Extremum> run_extrema(const std::vector<LD>& grid, const std::vector<LD>& err) {
  std::vector<Extremum> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Extremum here{grid[i], err[i]};
    if (out.empty() || std::signbit(out.back().e) != std::signbit(here.e)) {
      out.push_back(here);
    } else if (std::fabs(here.e) > std::fabs(out.back().e)) {
      out.back() = here;
    }
  }
  return out;
}

void reduce(std::vector<Extremum>& seq, std::size_t count) {
  while (seq.size() > count) {
    const std::size_t excess = seq.size() - count;
    LD best = std::fabs(seq.front().e);
    std::size_t at = 0;
    std::size_t len = 1;
    if (std::fabs(seq.back().e) < best) {
      best = std::fabs(seq.back().e);
      at = seq.size() - 1;
    }
    if (excess >= 2) {
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const LD score = std::max(std::fabs(seq[i].e), std::fabs(seq[i + 1].e));
        if (score < best) {
          best = score;
          at = i;
          len = 2;
        }
      }
    }
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(at),
              seq.begin() + static_cast<std::ptrdiff_t>(at + len));
  }
}

// Discrete minimax on `grid`; returns the level and updates `ref`.
LD discrete_minimax(const GridProblem& prob, const std::vector<LD>& grid, std::vector<LD>& ref) {
  const std::size_t size = static_cast<std::size_t>(prob.n) + 2;
  LD level = 0;
  std::vector<std::vector<LD>> seen{ref};
  for (int it = 0; it < kMaxExchanges; ++it) {
    const std::vector<LD> sol = prob.solve(ref);
    level = std::fabs(sol.back());
    std::vector<LD> err(grid.size());
    LD worst = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      err[i] = prob.error(sol, grid[i]);
      worst = std::max(worst, std::fabs(err[i]));
    }
    // P - sgn is formed by cancellation near +-1, so errors below a few ulps of
    // 1 are rounding noise.
    const LD floor = 32 * std::numeric_limits<LD>::epsilon();
    if (worst - level <= std::max(1e-12L * level, floor)) return level;
    std::vector<Extremum> seq = run_extrema(grid, err);
    if (seq.size() < size) throw ConvergenceError("grid_reference: alternation lost");
    reduce(seq, size);
    std::vector<LD> next;
    for (const Extremum& e : seq) next.push_back(e.x);
    // A revisited reference means the exchange is cycling on rounding noise.
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) return level;
    seen.push_back(next);
    ref = std::move(next);
  }
  throw ConvergenceError("grid_reference: exchange did not settle");
}

}  // namespace

double grid_reference(const TwoIntervalDomain& domain, int n, int grid_size) {
  validate(domain, true);
  if (n < 0 || n > 10) throw DomainError("grid_reference: requires 0 <= n <= 10");
  if (grid_size < 2000) throw DomainError("grid_reference: grid_size must be >= 2000");

  const LD A = domain.A;
  const LD B = domain.B;
  const GridProblem prob{(B - A) / 2, (A + B) / 2, n};

  std::vector<LD> grid = arcsine(-A, -1, grid_size);
  if (domain.degenerate()) {
    grid.push_back(1);
  } else {
    const std::vector<LD> right = arcsine(1, B, grid_size);
    grid.insert(grid.end(), right.begin(), right.end());
  }

  // Start from points spread evenly through the grid index range.
  std::vector<LD> ref;
  const std::size_t size = static_cast<std::size_t>(n) + 2;
  for (std::size_t j = 0; j < size; ++j) {
    ref.push_back(grid[j * (grid.size() - 1) / (size - 1)]);
  }

  LD level = discrete_minimax(prob, grid, ref);
  for (int level_index = 0; level_index < kRefineLevels; ++level_index) {
    std::vector<LD> fine = grid;
    for (LD x : ref) {
      auto it = std::lower_bound(grid.begin(), grid.end(), x);
      const std::size_t i = static_cast<std::size_t>(it - grid.begin());
      const LD lo = grid[i > 0 ? i - 1 : 0];
      const LD hi = grid[std::min(i + 1, grid.size() - 1)];
      // Stay inside the piece that holds x.
      for (int k = 1; k < kRefinePoints; ++k) {
        const LD y = lo + (hi - lo) * k / kRefinePoints;
        const bool same_piece = x < 0 ? (y >= -A && y <= -1) : (y >= 1 && y <= B);
        if (same_piece) {
          fine.push_back(y);
        }
      }
    }
    std::sort(fine.begin(), fine.end());
    fine.erase(std::unique(fine.begin(), fine.end()), fine.end());
    grid = std::move(fine);
    level = discrete_minimax(prob, grid, ref);
  }
  return static_cast<double>(level);
}

}  // namespace twogap::remez
