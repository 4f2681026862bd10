#include <gtest/gtest.h>

#include <random>

#include "explab/complexes/cochain.hpp"
#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/exactla/lattice.hpp"
#include "explab/spanning/spanning.hpp"
#include "support/oracles.hpp"

namespace explab {
namespace {

IntMatrix M(std::initializer_list<std::initializer_list<Integer>> rows) {
  return IntMatrix::from_rows(rows);
}

IntMatrix random_incidence(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntMatrix a(rows, cols);
  std::uniform_int_distribution<std::size_t> col(0, cols - 1);
  std::uniform_int_distribution<int> kind(0, 9);
  for (std::size_t i = 0; i < rows; ++i) {
    const int k = kind(rng);
    if (k == 0) continue;
    if (k <= 2 || cols == 1) {
      a(i, col(rng)) = k == 1 ? 1 : -1;
      continue;
    }
    const std::size_t p = col(rng);
    std::size_t q = col(rng);
    while (q == p) q = col(rng);
    a(i, p) = 1;
    a(i, q) = -1;
  }
  return a;
}

TEST(GraphTest, D0Examples) {
  Graph path{3, {}};
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  EXPECT_EQ(graph_d0(path), M({{1, -1, 0}, {0, 1, -1}}));
  IntMatrix single = graph_d0(Graph{1, {}});
  EXPECT_EQ(single.rows(), 0u);
  EXPECT_EQ(single.cols(), 1u);
  Graph loop{2, {}};
  loop.add_edge(1, 1);
  loop.add_edge(1, 2);
  EXPECT_EQ(graph_d0(loop), M({{1, 0}, {1, -1}}));
  Graph with_null{2, {}};
  with_null.add_null();
  with_null.add_self(2);
  EXPECT_EQ(graph_d0(with_null), M({{0, 0}, {0, 1}}));
  Graph bad{2, {}};
  bad.add_edge(1, 3);
  EXPECT_THROW(graph_d0(bad), DimensionError);
}

TEST(GraphTest, TextFormat) {
  Graph g = parse_graph("3 4\n1 2\n# comment\nself 3\n2 2\nnull\n");
  EXPECT_EQ(graph_d0(g), M({{1, -1, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(graph_d0(parse_graph(format_graph(g))), graph_d0(g));
  EXPECT_THROW(parse_graph("2 1\n1 5\n"), ParseError);
  EXPECT_THROW(parse_graph("2 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n1 x\n"), ParseError);
  try {
    parse_graph("2 1\n\n1 2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(IncidenceTest, ShapeValidation) {
  EXPECT_TRUE(is_incidence_shaped(M({{1, -1, 0}, {0, 0, 0}, {-1, 0, 0}})));
  EXPECT_FALSE(is_incidence_shaped(M({{1, 1}})));
  EXPECT_FALSE(is_incidence_shaped(M({{2, 0}})));
  try {
    require_incidence_shape(M({{1, -1}, {-1, -1}}));
    FAIL();
  } catch (const RowShapeError& e) {
    EXPECT_EQ(e.row(), 2u);
  }
  EXPECT_THROW(incidence_kernel_basis(M({{1, 2}})), RowShapeError);
}

TEST(IncidenceTest, KernelExamples) {
  EXPECT_EQ(incidence_kernel_basis(M({{1, -1, 0}, {0, 1, -1}})).generators(), M({{1, 1, 1}}));
  EXPECT_EQ(incidence_kernel_basis(M({{1, 0}, {1, -1}})).rank(), 0u);
  EXPECT_EQ(incidence_kernel_basis(IntMatrix(0, 4)).generators(), IntMatrix::identity(4));
  // A single -1 marks its component exactly like a single +1.
  EXPECT_EQ(incidence_kernel_basis(M({{0, -1, 0}, {1, 0, -1}})).generators(), M({{1, 0, 1}}));
}

TEST(IncidenceTest, KernelMatchesHermiteKernelAndIsSpanned) {
  std::mt19937_64 rng(83);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t m = std::uniform_int_distribution<int>(1, 8)(rng);
    const std::size_t n = std::uniform_int_distribution<int>(1, 8)(rng);
    const IntMatrix a = random_incidence(rng, m, n);
    const LatticeBasis by_graph = incidence_kernel_basis(a);
    const LatticeBasis by_hnf = integer_kernel_basis(a);
    EXPECT_TRUE(by_graph.same_lattice(by_hnf));
    EXPECT_TRUE(is_integrally_spanned(by_hnf.generators()).spanned);
    const LatticeBasis image(a.transpose());
    EXPECT_TRUE(is_integrally_spanned(image.basis()).spanned);
  }
}

TEST(IncidenceTest, FractionalPartsLieInKernel) {
  std::mt19937_64 rng(89);
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = std::uniform_int_distribution<int>(1, 4)(rng);
    const IntMatrix a = random_incidence(rng, std::uniform_int_distribution<int>(1, 5)(rng), n);
    for (int den : {2, 3}) {
      testing::for_each_in_box(n, -den, 2 * den, [&](const std::vector<int>& x) {
        RatVector gamma;
        for (int e : x) gamma.emplace_back(Integer(e), Integer(den));
        if (!to_integer(explab::apply(a, gamma))) return;
        RatVector frac;
        for (const auto& g : gamma) frac.push_back(g.fractional_part());
        EXPECT_TRUE(is_zero_vector(explab::apply(a, frac)));
        ++checked;
      });
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(PresentationTest, ParseExamples) {
  auto p = parse_presentation("gens: a b; rel: a b a^-1 b^-1");
  ASSERT_EQ(p.generators.size(), 2u);
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(p.relators[0].size(), 4u);
  auto q = parse_presentation(format_presentation(p));
  EXPECT_EQ(q.generators, p.generators);
  EXPECT_EQ(q.relators, p.relators);

  auto b3 = parse_presentation("gens: s1 s2; rel: s1 s2 s1 s2^-1 s1^-1 s2^-1");
  EXPECT_EQ(b3.relators, braid_presentation(3).relators);
  EXPECT_EQ(presentation_d1(b3), M({{1, -1}}));

  auto empty = parse_presentation("gens: a; rel:");
  EXPECT_EQ(empty.generators.size(), 1u);
  EXPECT_TRUE(empty.relators.empty());
}

TEST(PresentationTest, BracketsAndExponents) {
  auto p = parse_presentation("gens: x y z;\nrel: [x, y] z^-1;\nrel: x^3 y^-2; rel: 1");
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(presentation_d1(p), M({{0, 0, -1}, {3, -2, 0}, {0, 0, 0}}));
  EXPECT_TRUE(p.relators[2].empty());
  auto again = parse_presentation(format_presentation(p));
  EXPECT_EQ(again.relators, p.relators);
}

TEST(PresentationTest, Errors) {
  auto error_at = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(error_at("gens: a; rel: a b"), std::make_pair(std::size_t{1}, std::size_t{17}));
  EXPECT_EQ(error_at("gens: a;\nrel: a^x"), std::make_pair(std::size_t{2}, std::size_t{8}));
  EXPECT_NE(error_at("gens: a; rel: a^"), std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_NE(error_at("gens: a; rel: [a, a"), std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_NE(error_at("gens: a; rel: a]"), std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_NE(error_at("rel: a"), std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_NE(error_at("gens: a a"), std::make_pair(std::size_t{0}, std::size_t{0}));
}

TEST(PresentationTest, CommutatorRelatorsGiveZeroRows) {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 50; ++iter) {
    GroupPresentation p;
    const std::size_t n = std::uniform_int_distribution<int>(1, 5)(rng);
    for (std::size_t i = 0; i < n; ++i) p.generators.push_back("g" + std::to_string(i));
    auto random_word = [&] {
      Word w;
      const int len = std::uniform_int_distribution<int>(0, 4)(rng);
      for (int k = 0; k < len; ++k)
        w.push_back({std::uniform_int_distribution<std::size_t>(0, n - 1)(rng),
                     std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
      return w;
    };
    for (int r = 0; r < 4; ++r) p.relators.push_back(commutator(random_word(), random_word()));
    EXPECT_TRUE(presentation_d1(p).is_zero());
  }
}

TEST(PresentationTest, BraidFamilies) {
  auto b3 = braid_presentation(3);
  EXPECT_EQ(b3.generators.size(), 2u);
  EXPECT_EQ(b3.relators.size(), 1u);
  auto b4 = braid_presentation(4);
  EXPECT_EQ(b4.generators.size(), 3u);
  EXPECT_EQ(b4.relators.size(), 3u);
  EXPECT_EQ(presentation_d1(b4), M({{0, 0, 0}, {1, -1, 0}, {0, 1, -1}}));
  EXPECT_THROW(braid_presentation(1), DimensionError);
  for (std::size_t n = 2; n <= 8; ++n) {
    const IntMatrix d1 = presentation_d1(braid_presentation(n));
    EXPECT_TRUE(is_incidence_shaped(d1));
    EXPECT_EQ(d1.rows(), (n - 2) * (n - 3) / 2 + (n - 2));
  }
}

TEST(PresentationTest, SteinbergFamilies) {
  auto st3 = steinberg_presentation(3);
  EXPECT_EQ(st3.generators.size(), 6u);
  EXPECT_EQ(st3.generators[0], "x12");
  const IntMatrix d1 = presentation_d1(st3);
  EXPECT_TRUE(is_incidence_shaped(d1));
  for (std::size_t r = 0; r < d1.rows(); ++r) {
    int nonzero = 0;
    for (std::size_t j = 0; j < d1.cols(); ++j) {
      if (d1(r, j).is_zero()) continue;
      ++nonzero;
      EXPECT_EQ(d1(r, j), Integer(-1));
    }
    EXPECT_LE(nonzero, 1);
  }
  // [x12, x23] x13^-1 has a single -1 at x13.
  auto p = parse_presentation("gens: x12 x13 x21 x23 x31 x32; rel: [x12, x23] x13^-1");
  EXPECT_EQ(presentation_d1(p), M({{0, -1, 0, 0, 0, 0}}));
  const auto& words = st3.relators;
  EXPECT_NE(std::find(words.begin(), words.end(), p.relators[0]), words.end());
  EXPECT_TRUE(presentation_d1(steinberg_presentation(2)).rows() == 0);
  EXPECT_EQ(steinberg_presentation(4).generators.size(), 12u);
  EXPECT_THROW(steinberg_presentation(1), DimensionError);
}

TEST(CochainTest, H1Examples) {
  Graph edge{2, {}};
  edge.add_edge(1, 2);
  EXPECT_TRUE(h1_is_trivial(graph_complex(edge)));
  CochainComplex circle(IntMatrix(1, 1), IntMatrix(0, 1), "circle");
  EXPECT_FALSE(h1_is_trivial(circle));
  CochainComplex disk(IntMatrix(1, 1), IntMatrix(1, 1), "disk");
  EXPECT_FALSE(h1_is_trivial(disk));
  Graph triangle{3, {}};
  triangle.add_edge(1, 2);
  triangle.add_edge(2, 3);
  triangle.add_edge(3, 1);
  EXPECT_FALSE(h1_is_trivial(graph_complex(triangle)));
  EXPECT_TRUE(h1_is_trivial(graph_complex(triangle, M({{1, 1, 1}}))));
  EXPECT_THROW(graph_complex(triangle, M({{1, 1, 0}})), CochainError);
  EXPECT_THROW(graph_complex(triangle, M({{1, 1}})), DimensionError);
  EXPECT_FALSE(h1_is_trivial(presentation_complex(braid_presentation(4))));
  EXPECT_TRUE(h1_is_trivial(presentation_complex(steinberg_presentation(3))));
}

}  // namespace
}  // namespace explab
