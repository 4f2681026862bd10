#include "explab/expansion/simplex.hpp"

#include <optional>
#include <string>

namespace explab {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class Tableau {
 public:
  // rows x (cols + 1); the last column holds the right-hand side.
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, RatVector(cols + 1)), basis_(rows, kNone) {}

  Rational& at(std::size_t r, std::size_t j) { return t_[r][j]; }
  const Rational& at(std::size_t r, std::size_t j) const { return t_[r][j]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  const Rational& rhs(std::size_t r) const { return t_[r][cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc, RatVector& cost, Rational& cost_rhs) {
    RatVector& prow = t_[pr];
    const Rational inv = Rational(1) / prow[pc];
    for (auto& e : prow)
      if (!e.is_zero()) e *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || t_[r][pc].is_zero()) continue;
      eliminate(t_[r], prow, t_[r][pc]);
    }
    if (!cost[pc].is_zero()) {
      const Rational f = cost[pc];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!prow[j].is_zero()) cost[j] -= f * prow[j];
      cost_rhs -= f * prow[cols_];
    }
    basis_[pr] = pc;
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  void truncate_cols(std::size_t cols) {
    for (auto& row : t_) {
      row[cols] = std::move(row[cols_]);
      row.resize(cols + 1);
    }
    cols_ = cols;
  }

 private:
  static void eliminate(RatVector& row, const RatVector& prow, Rational f) {
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!prow[j].is_zero()) row[j] -= f * prow[j];
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
};

// Reduced costs for objective c given the current basis: cost = c - c_B B^-1 A,
// cost_rhs = -c_B B^-1 b.
void price(const Tableau& t, const std::vector<std::size_t>& basis, const RatVector& c,
           RatVector& cost, Rational& cost_rhs) {
  cost = c;
  cost.resize(t.cols());
  cost_rhs = Rational(0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Rational cb = c[basis[r]];
    if (cb.is_zero()) continue;
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t.at(r, j).is_zero()) cost[j] -= cb * t.at(r, j);
    cost_rhs -= cb * t.rhs(r);
  }
}

// Runs Bland's-rule simplex on columns [0, active_cols). Returns false if
// unbounded.
bool iterate(Tableau& t, RatVector& cost, Rational& cost_rhs, std::size_t active_cols,
             std::size_t& pivots) {
  for (;;) {
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < active_cols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == kNone) return true;
    std::size_t leave = kNone;
    Rational best;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.at(r, enter).sign() <= 0) continue;
      Rational ratio = t.rhs(r) / t.at(r, enter);
      if (leave == kNone || ratio < best ||
          (ratio == best && t.basis()[r] < t.basis()[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave == kNone) return false;
    t.pivot(leave, enter, cost, cost_rhs);
    ++pivots;
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t m = problem.a.rows();
  const std::size_t n = problem.a.cols();
  if (problem.b.size() != m || problem.c.size() != n) {
    throw DimensionError("linear program with " + std::to_string(m) + "x" +
                         std::to_string(n) + " constraints, " +
                         std::to_string(problem.b.size()) + " right-hand sides and " +
                         std::to_string(problem.c.size()) + " costs");
  }

  // Sign-normalize rows so that b >= 0.
  std::vector<int> row_sign(m, 1);
  for (std::size_t r = 0; r < m; ++r)
    if (problem.b[r].sign() < 0) row_sign[r] = -1;

  // Unit columns usable as an initial basis.
  std::vector<std::size_t> start(m, kNone);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hit = kNone;
    bool unit = true;
    for (std::size_t r = 0; r < m && unit; ++r) {
      const Rational& e = problem.a(r, j);
      if (e.is_zero()) continue;
      if (hit != kNone || e != Rational(row_sign[r])) unit = false;
      hit = r;
    }
    if (unit && hit != kNone && start[hit] == kNone) {
      start[hit] = j;
      used[j] = true;
    }
  }
  std::size_t artificials = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (start[r] == kNone) ++artificials;

  Tableau t(m, n + artificials);
  for (std::size_t r = 0, a = n; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = problem.a(r, j);
      if (!e.is_zero()) t.at(r, j) = row_sign[r] > 0 ? e : -e;
    }
    t.rhs(r) = row_sign[r] > 0 ? problem.b[r] : -problem.b[r];
    if (start[r] == kNone) {
      t.at(r, a) = Rational(1);
      t.basis()[r] = a++;
    } else {
      t.basis()[r] = start[r];
    }
  }

  LpSolution out;
  RatVector cost;
  Rational cost_rhs;
  if (artificials > 0) {
    RatVector phase1(n + artificials);
    for (std::size_t j = n; j < n + artificials; ++j) phase1[j] = Rational(1);
    price(t, t.basis(), phase1, cost, cost_rhs);
    iterate(t, cost, cost_rhs, n + artificials, out.pivots);
    if (!cost_rhs.is_zero()) {
      out.status = LpStatus::infeasible;
      return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < n) {
        ++r;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < n && col == kNone; ++j)
        if (!t.at(r, j).is_zero()) col = j;
      if (col == kNone) {
        t.erase_row(r);  // redundant constraint
        continue;
      }
      t.pivot(r, col, cost, cost_rhs);
      ++out.pivots;
      ++r;
    }
    t.truncate_cols(n);
  }

  price(t, t.basis(), problem.c, cost, cost_rhs);
  if (!iterate(t, cost, cost_rhs, n, out.pivots)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.value = -cost_rhs;
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) out.x[t.basis()[r]] = t.rhs(r);
  return out;
}

}  // namespace explab
