#include <gtest/gtest.h>

#include <random>

#include "explab/exactla/lattice.hpp"
#include "explab/exactla/normal_form.hpp"
#include "explab/spanning/spanning.hpp"
#include "support/oracles.hpp"

namespace explab {
namespace {

IntMatrix M(std::initializer_list<std::initializer_list<Integer>> rows) {
  return IntMatrix::from_rows(rows);
}

// Product of elementary integer row operations, at most `steps` of them.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t k, int steps) {
  IntMatrix u = IntMatrix::identity(k);
  if (k == 0) return u;
  std::uniform_int_distribution<std::size_t> row(0, k - 1);
  std::uniform_int_distribution<int> kind(0, 2), factor(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = row(rng), b = row(rng);
    switch (kind(rng)) {
      case 0:
        u.swap_rows(a, b);
        break;
      case 1:
        for (std::size_t j = 0; j < k; ++j) u(a, j) = -u(a, j);
        break;
      default:
        if (a == b) break;
        {
          const Integer f = factor(rng);
          for (std::size_t j = 0; j < k; ++j) u(a, j) += f * u(b, j);
        }
    }
  }
  return u;
}

void expect_witness_sound(const IntMatrix& g, const SpanningVerdict& verdict) {
  ASSERT_FALSE(verdict.spanned);
  ASSERT_TRUE(verdict.witness.has_value());
  const IntMatrix p = project_rows(g, verdict.witness->subset);
  const IntVector& x = verdict.witness->vector;
  EXPECT_TRUE(solve_rational(p.transpose(), to_rational(x)).has_value());
  EXPECT_FALSE(lattice_member(LatticeBasis(p), x));
}

TEST(CoordSubsetTest, Project) {
  EXPECT_EQ(project(CoordSubset(3, {1, 3}), IntVector{7, 8, 9}), IntVector({7, 9}));
  EXPECT_EQ(project(CoordSubset::full(3), IntVector{4, 5, 6}), IntVector({4, 5, 6}));
  EXPECT_EQ(project(CoordSubset(2, {2}), IntVector{1, 5}), IntVector({5}));
  EXPECT_THROW(project(CoordSubset(2, {2}), IntVector{1, 2, 3}), DimensionError);
  EXPECT_THROW(CoordSubset(3, {2, 1}), DimensionError);
  EXPECT_THROW(CoordSubset(3, {4}), DimensionError);
  EXPECT_EQ(CoordSubset(4, {1, 3}).to_string(), "{1,3}");
}

TEST(SaturatedForTest, Examples) {
  EXPECT_FALSE(saturated_for(M({{1, 1}, {1, 3}}), CoordSubset(2, {1, 2})));
  EXPECT_FALSE(saturated_for(M({{2, 1}}), CoordSubset(2, {1})));
  EXPECT_TRUE(saturated_for(M({{2, 1}}), CoordSubset(2, {1, 2})));
}

TEST(SaturatedForTest, AgreesWithMinorGcd) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = dim(rng);
    IntMatrix g = testing::random_matrix(rng, dim(rng), n, -3, 3);
    const auto subset = CoordSubset::from_mask(n, std::uniform_int_distribution<unsigned>(
                                                      1, (1u << n) - 1)(rng));
    const Integer minors = testing::gcd_of_maximal_minors(project_rows(g, subset));
    EXPECT_EQ(saturated_for(g, subset), minors.is_zero() || minors.is_one());
  }
}

TEST(IntegrallySpannedTest, FixtureExamples) {
  auto v = is_integrally_spanned(M({{1, 1}, {1, 3}}));
  EXPECT_FALSE(v.spanned);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->subset, CoordSubset(2, {1, 2}));
  EXPECT_EQ(v.witness->vector, IntVector({1, 2}));
  expect_witness_sound(M({{1, 1}, {1, 3}}), v);

  for (int k : {-3, 0, 2, 5}) EXPECT_TRUE(is_integrally_spanned(M({{0, 1}, {1, k}})).spanned);

  auto single = is_integrally_spanned(M({{2, 1}}));
  EXPECT_FALSE(single.spanned);
  EXPECT_EQ(single.witness->subset, CoordSubset(2, {1}));
  EXPECT_EQ(single.witness->vector, IntVector({1}));
}

TEST(IntegrallySpannedTest, NonMonotoneSubsets) {
  const IntMatrix g = M({{2, 1}});
  EXPECT_FALSE(saturated_for(g, CoordSubset(2, {1})));
  EXPECT_TRUE(saturated_for(g, CoordSubset(2, {2})));
  EXPECT_TRUE(saturated_for(g, CoordSubset(2, {1, 2})));
}

TEST(IntegrallySpannedTest, EmptyAndZeroGenerators) {
  EXPECT_TRUE(is_integrally_spanned(IntMatrix(0, 3)).spanned);
  EXPECT_TRUE(is_integrally_spanned(IntMatrix(2, 3)).spanned);
  auto none = is_integrally_spanned(IntMatrix(0, 0));
  EXPECT_TRUE(none.spanned);
  EXPECT_EQ(none.subsets_checked, 0u);
  EXPECT_EQ(is_integrally_spanned(IntMatrix(1, 3)).subsets_checked, 7u);
}

TEST(IntegrallySpannedTest, SingleVectorCharacterization) {
  testing::for_each_in_box(3, -2, 2, [](const std::vector<int>& x) {
    IntMatrix g(1, 3, IntVector(x.begin(), x.end()));
    bool small = true;
    for (int e : x) small = small && e >= -1 && e <= 1;
    EXPECT_EQ(is_integrally_spanned(g).spanned, small);
  });
}

TEST(IntegrallySpannedTest, DisjointSupportFamilies) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    IntMatrix g(k, n);
    for (std::size_t j = 0; j < n; ++j) {
      const int owner = std::uniform_int_distribution<int>(-1, static_cast<int>(k) - 1)(rng);
      if (owner >= 0) g(owner, j) = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    }
    EXPECT_TRUE(is_integrally_spanned(g).spanned);
  }
}

TEST(IntegrallySpannedTest, ColumnGcdForcesFailure) {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix g = testing::random_matrix(rng, 2, 3, -3, 3);
    Integer col_gcd = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) col_gcd = gcd(col_gcd, g(i, 1));
    if (col_gcd.is_zero() || col_gcd.is_one()) {
      g(0, 1) = 2;
      g(1, 1) = -4;
    }
    auto v = is_integrally_spanned(g);
    EXPECT_FALSE(v.spanned);
    expect_witness_sound(g, v);
  }
}

TEST(IntegrallySpannedTest, GeneratingSetIndependence) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dim(1, 4);
  int failures = 0;
  for (int iter = 0; iter < 150; ++iter) {
    IntMatrix g = testing::random_matrix(rng, dim(rng), dim(rng), -2, 2);
    IntMatrix u = random_unimodular(rng, g.rows(), 6);
    IntMatrix h = respan(g, u);
    EXPECT_TRUE(LatticeBasis(g).same_lattice(LatticeBasis(h)));
    auto a = is_integrally_spanned(g);
    auto b = is_integrally_spanned(h);
    EXPECT_EQ(a.spanned, b.spanned);
    if (!a.spanned) {
      ++failures;
      expect_witness_sound(g, a);
      expect_witness_sound(h, b);
      EXPECT_EQ(a.witness->subset, b.witness->subset);
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(RespanTest, Examples) {
  EXPECT_EQ(respan(M({{0, 1}, {1, 5}}), IntMatrix::identity(2)), M({{0, 1}, {1, 5}}));
  EXPECT_EQ(respan(M({{0, 1}, {1, 5}}), M({{1, 1}, {0, 1}})), M({{1, 6}, {1, 5}}));
  EXPECT_EQ(respan(M({{1, 1}, {1, 3}}), M({{1, 0}, {-1, 1}})), M({{1, 1}, {0, 2}}));
  EXPECT_THROW(respan(M({{1, 1}, {1, 3}}), M({{2, 0}, {0, 1}})), NotUnimodularError);
}

TEST(IntegrallySpannedTest, CapIsEnforced) {
  IntMatrix g(1, 5);
  EXPECT_THROW(is_integrally_spanned(g, SpanningOptions{30}), CapExceededError);
  EXPECT_TRUE(is_integrally_spanned(g, SpanningOptions{31}).spanned);
  ::setenv("EXPANSION_LAB_MAX_SUBSETS", "10", 1);
  EXPECT_THROW(is_integrally_spanned(g), CapExceededError);
  ::unsetenv("EXPANSION_LAB_MAX_SUBSETS");
  EXPECT_NO_THROW(is_integrally_spanned(g));
  EXPECT_THROW(is_integrally_spanned(IntMatrix(1, 23)), CapExceededError);
}

}  // namespace
}  // namespace explab
