#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "explab/exactla/linear_solve.hpp"
#include "explab/expansion/simplex.hpp"
#include "support/oracles.hpp"

namespace explab {
namespace {

RatMatrix R(std::initializer_list<std::initializer_list<Rational>> rows) {
  return RatMatrix::from_rows(rows);
}

// Minimum over basic feasible solutions, by trying every column basis.
std::optional<Rational> vertex_enumeration(const LpProblem& lp) {
  std::optional<Rational> best;
  const std::size_t m = rank(lp.a);
  for (std::size_t size = 0; size <= std::min(m, lp.a.cols()); ++size) {
    testing::for_each_subset_of_size(lp.a.cols(), size, [&](const std::vector<std::size_t>& cols) {
      auto sol = solve_affine(lp.a.select_cols(cols), lp.b);
      if (!sol || sol->directions.rows() != 0) return;
      Rational value;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (sol->particular[i].sign() < 0) return;
        value += lp.c[cols[i]] * sol->particular[i];
      }
      if (!best || value < *best) best = value;
    });
  }
  return best;
}

TEST(SimplexTest, SmallProgram) {
  // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
  LpProblem lp{R({{1, 2, 1, 0}, {3, 1, 0, 1}}), {4, 6}, {-1, -1, 0, 0}};
  auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, Rational(Integer(-14), Integer(5)));
  EXPECT_EQ(sol.x[0], Rational(Integer(8), Integer(5)));
  EXPECT_EQ(sol.x[1], Rational(Integer(6), Integer(5)));
}

TEST(SimplexTest, NeedsPhaseOne) {
  // min x + y  s.t. x + y - s = 2, x - y = 0
  LpProblem lp{R({{1, 1, -1}, {1, -1, 0}}), {2, 0}, {1, 1, 0}};
  auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, Rational(2));
  EXPECT_EQ(sol.x[0], Rational(1));
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LpProblem infeasible{R({{1, 1}}), {-1}, {0, 0}};
  EXPECT_EQ(solve_lp(infeasible).status, LpStatus::infeasible);
  LpProblem unbounded{R({{1, -1}}), {1}, {0, -1}};
  EXPECT_EQ(solve_lp(unbounded).status, LpStatus::unbounded);
}

TEST(SimplexTest, RedundantRows) {
  LpProblem lp{R({{1, 1, 1}, {2, 2, 2}, {1, 0, 0}}), {3, 6, 1}, {0, 1, 2}};
  auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, Rational(2));
}

TEST(SimplexTest, BealeCyclingExample) {
  // Cycles under the largest-coefficient rule; Bland's rule terminates.
  Rational q(Integer(1), Integer(4)), h(Integer(1), Integer(2));
  LpProblem lp{R({{q, -8, -1, 9, 1, 0, 0},
                  {h, -12, -h, 3, 0, 1, 0},
                  {0, 0, 1, 0, 0, 0, 1}}),
               {0, 0, 1},
               {Rational(Integer(-3), Integer(4)), 20, -h, 6, 0, 0, 0}};
  auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, Rational(Integer(-5), Integer(4)));
}

TEST(SimplexTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> dim(1, 3), extra(1, 3), entry(-3, 3), cost(-2, 4);
  int optimal = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t m = dim(rng);
    const std::size_t n = m + extra(rng);
    LpProblem lp{RatMatrix(m, n), RatVector(m), RatVector(n)};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) lp.a(i, j) = entry(rng);
    // Feasible by construction: b = A x0 with x0 >= 0.
    for (std::size_t j = 0; j < n; ++j) {
      const int x0 = std::uniform_int_distribution<int>(0, 2)(rng);
      for (std::size_t i = 0; i < m; ++i) lp.b[i] += lp.a(i, j) * Rational(x0);
    }
    for (auto& c : lp.c) c = cost(rng);
    auto sol = solve_lp(lp);
    ASSERT_NE(sol.status, LpStatus::infeasible);
    if (sol.status == LpStatus::unbounded) continue;
    ++optimal;
    const auto expected = vertex_enumeration(lp);
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(sol.value, *expected);
    EXPECT_EQ(lp.a * sol.x, lp.b);
    for (const auto& e : sol.x) EXPECT_GE(e.sign(), 0);
  }
  EXPECT_GT(optimal, 100);
}

}  // namespace
}  // namespace explab
