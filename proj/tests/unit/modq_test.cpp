#include <gtest/gtest.h>

#include <map>
#include <random>

#include "explab/expansion/modq.hpp"
#include "support/oracles.hpp"

namespace explab {
namespace {

IntMatrix M(std::initializer_list<std::initializer_list<Integer>> rows) {
  return IntMatrix::from_rows(rows);
}

Rational Q(std::int64_t p, std::int64_t q = 1) { return Rational(Integer(p), Integer(q)); }

// Minimum weight per image vector over all of Z_q^n, computed directly.
std::map<ModQVector, std::size_t> brute_force_leaders(const ModQMatrix& a) {
  std::map<ModQVector, std::size_t> out;
  const int q = static_cast<int>(a.modulus());
  testing::for_each_in_box(a.cols(), 0, q - 1, [&](const std::vector<int>& x) {
    ModQVector u(x.begin(), x.end());
    ModQVector w = a.apply(u);
    const std::size_t weight = hamming_weight(u);
    auto it = out.find(w);
    if (it == out.end() || weight < it->second) out[w] = weight;
  });
  return out;
}

TEST(ModQTest, PrimalityAndReduction) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(reduce_mod_q(M({{1}}), 4), NotPrimeError);
  auto r = reduce_mod_q(M({{-1, 1}}), 2);
  EXPECT_EQ(r(0, 0), 1u);
  EXPECT_EQ(r(0, 1), 1u);
  EXPECT_EQ(lift_section(ModQVector{1, 0, 2}), IntVector({1, 0, 2}));
}

TEST(ModQTest, SectionProperty) {
  std::mt19937_64 rng(73);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    for (int iter = 0; iter < 20; ++iter) {
      ModQVector u(5);
      for (auto& e : u) e = std::uniform_int_distribution<std::uint32_t>(0, q - 1)(rng);
      EXPECT_EQ(reduce_mod_q(lift_section(u), q), u);
    }
  }
}

TEST(XiZqAtTest, Examples) {
  auto r = xi_zq_at(reduce_mod_q(M({{1, 1}}), 2), ModQVector{1});
  EXPECT_EQ(r.value, Q(1));
  EXPECT_EQ(hamming_weight(reduce_mod_q(to_integer(r.witness).value(), 2)), 1u);
  EXPECT_EQ(r.ring, Ring::mod(2));
  EXPECT_EQ(r.solver, SolverTag::coset_bruteforce);
  EXPECT_EQ(xi_zq_at(reduce_mod_q(IntMatrix::identity(3), 3), ModQVector{1, 0, 0}).value, Q(1));
  auto s = xi_zq_at(reduce_mod_q(M({{1, 1, 0}, {0, 1, 1}}), 2), ModQVector{1, 1});
  EXPECT_EQ(s.value, Q(1, 2));
  EXPECT_EQ(s.witness, RatVector({Q(0), Q(1), Q(0)}));
}

TEST(XiZqAtTest, Errors) {
  auto a = reduce_mod_q(M({{1, 1}, {1, 1}}), 3);
  EXPECT_THROW(xi_zq_at(a, ModQVector{0, 0}), ZeroTargetError);
  EXPECT_THROW(xi_zq_at(a, ModQVector{1, 0}), NotInImageError);
  auto wide = reduce_mod_q(IntMatrix(1, 12), 5);
  EXPECT_THROW(xi_zq_global(wide), UndefinedSupremumError);
  auto big = reduce_mod_q(IntMatrix::identity(1).select_cols(std::vector<std::size_t>(11, 0)), 5);
  EXPECT_THROW(xi_zq_at(big, ModQVector{1}, ModQLimits{1000, 1000}), CapExceededError);
}

TEST(XiZqGlobalTest, Examples) {
  EXPECT_EQ(xi_zq_global(reduce_mod_q(M({{1, 1}}), 2)).value, Q(1));
  EXPECT_EQ(xi_zq_global(reduce_mod_q(IntMatrix::identity(2), 2)).value, Q(1));
  EXPECT_EQ(xi_zq_global(reduce_mod_q(M({{1, 1}}), 3)).value, Q(1));
}

TEST(XiZqPropertyTest, MatchesSweepAndRange) {
  std::mt19937_64 rng(79);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (int iter = 0; iter < 25; ++iter) {
      const std::size_t m = std::uniform_int_distribution<int>(1, 4)(rng);
      const std::size_t n = std::uniform_int_distribution<int>(1, 5)(rng);
      auto a = reduce_mod_q(testing::random_matrix(rng, m, n, -2, 2), q);
      const auto brute = brute_force_leaders(a);
      CosetLeaders leaders(a, 10000000);
      EXPECT_EQ(leaders.images().size(), brute.size());
      Rational best;
      bool any = false;
      for (const auto& [w, weight] : brute) {
        EXPECT_EQ(leaders.at(w).weight, weight);
        EXPECT_EQ(a.apply(leaders.at(w).leader), w);
        const std::size_t wt = hamming_weight(w);
        if (wt == 0) continue;
        auto r = xi_zq_at(a, w);
        EXPECT_EQ(r.value, Q(static_cast<std::int64_t>(weight), static_cast<std::int64_t>(wt)));
        EXPECT_GE(r.value, Q(1, static_cast<std::int64_t>(m)));
        EXPECT_LE(r.value, Q(static_cast<std::int64_t>(n)));
        EXPECT_EQ(a.apply(reduce_mod_q(to_integer(r.witness).value(), q)), w);
        if (!any || r.value > best) best = r.value;
        any = true;
      }
      if (!any) {
        EXPECT_THROW(xi_zq_global(a), UndefinedSupremumError);
        continue;
      }
      auto g = xi_zq_global(a);
      EXPECT_EQ(g.value, best);
      // The per-target enumeration path agrees with the sweep.
      auto h = xi_zq_global(a, ModQLimits{10000000, 1000000, 1});
      EXPECT_EQ(h.value, best);
    }
  }
}

}  // namespace
}  // namespace explab
