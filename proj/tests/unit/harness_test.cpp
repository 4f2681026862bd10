#include <gtest/gtest.h>

#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/errors.hpp"
#include "explab/expansion/modq.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/generators.hpp"

namespace explab {
namespace {

const InstanceRecord& find(const CampaignReport& r, const std::string& descriptor) {
  for (const auto& i : r.instances)
    if (i.descriptor == descriptor) return i;
  throw std::runtime_error("no instance " + descriptor);
}

TEST(GeneratorTest, IncidenceMatricesCoverAllRowTypes) {
  Rng rng(5);
  int zero = 0, single = 0, pair = 0;
  for (int i = 0; i < 300; ++i) {
    const IntMatrix a = random_incidence_matrix(rng);
    ASSERT_TRUE(is_incidence_shaped(a));
    EXPECT_GE(a.cols(), 2u);
    EXPECT_LE(a.cols(), 8u);
    EXPECT_GE(a.rows(), 1u);
    EXPECT_LE(a.rows(), 8u);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      int nz = 0;
      for (const auto& x : a.row(r)) nz += !x.is_zero();
      (nz == 0 ? zero : nz == 1 ? single : pair)++;
    }
  }
  EXPECT_GT(zero, 0);
  EXPECT_GT(single, 0);
  EXPECT_GT(pair, single);
}

TEST(GeneratorTest, UniformIntStaysInRange) {
  Rng rng(1);
  std::vector<int> seen(7);
  for (int i = 0; i < 7000; ++i) {
    const auto x = uniform_int(rng, -3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    ++seen[x + 3];
  }
  for (int c : seen) EXPECT_GT(c, 800);
}

TEST(EqualityCampaignTest, FixturesAndControl) {
  const CampaignReport r = campaign_equality(7, 0);
  EXPECT_EQ(r.failed(), 0u);
  EXPECT_EQ(r.instances.size(), 9u);
  const auto& edge = find(r, "fixture edge");
  EXPECT_EQ(edge.verdict, Verdict::pass);
  EXPECT_EQ(edge.data["equality"]["targets"], 1);
  const auto& control = find(r, "control [[1,2]] at (1)");
  EXPECT_EQ(control.verdict, Verdict::pass);
  EXPECT_EQ(control.data["xi_q"], "1/2");
  EXPECT_EQ(control.data["xi_z"], "1");
  EXPECT_EQ(xi_q_at(IntMatrix::from_rows({{1, -1}}), IntVector{1}).value, Rational(1));
  EXPECT_EQ(xi_z_at(IntMatrix::from_rows({{1, -1}}), IntVector{1}).value, Rational(1));
}

TEST(EqualityCampaignTest, DeterministicAndReplayable) {
  const CampaignReport a = campaign_equality(11, 5);
  const CampaignReport b = campaign_equality(11, 5);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_TRUE(a.ok());
  for (const auto& i : a.instances) EXPECT_TRUE(i.data.contains("matrix"));
  const auto j = a.to_json();
  EXPECT_EQ(j["totals"]["instances"], a.instances.size());
  EXPECT_EQ(j["seed"], 11);
}

TEST(EqualityCampaignTest, SampledTargetsWhenBoxIsLarge) {
  TargetSampling sampling;
  sampling.box_limit = 10;
  sampling.sample_count = 50;
  const CampaignReport r = campaign_equality(3, 10, sampling);
  EXPECT_EQ(r.failed(), 0u);
  for (const auto& i : r.instances) {
    if (i.data.contains("equality")) EXPECT_LE(i.data["equality"]["targets"].get<int>(), 50);
  }
}

TEST(CwCampaignTest, TreesPassCircleSkipped) {
  const CampaignReport r = campaign_cw(default_cw_complexes());
  EXPECT_EQ(r.failed(), 0u);
  EXPECT_EQ(find(r, "edge").verdict, Verdict::pass);
  EXPECT_EQ(find(r, "tree8").verdict, Verdict::pass);
  EXPECT_EQ(find(r, "filled-triangle").verdict, Verdict::pass);
  EXPECT_EQ(find(r, "circle").verdict, Verdict::skipped);
  EXPECT_EQ(find(r, "b3-presentation").verdict, Verdict::skipped);
  EXPECT_EQ(find(r, "edge").data["d0"]["targets"], 1);
}

TEST(CwCampaignTest, CochainConditionIsEnforced) {
  Graph edge{2, {}};
  edge.add_edge(1, 2);
  EXPECT_THROW(graph_complex(edge, IntMatrix::from_rows({{1}})), CochainError);
}

TEST(ModqCampaignTest, EdgeIsTightAtTwo) {
  const IntMatrix a = IntMatrix::from_rows({{1, -1}});
  EXPECT_EQ(xi_z_global(a).value, Rational(1));
  EXPECT_EQ(xi_zq_global(reduce_mod_q(a, 2)).value, Rational(1));
  EXPECT_TRUE(campaign_modq(1, 5, {}).instances.empty());
  EXPECT_THROW(campaign_modq(1, 5, {4}), NotPrimeError);
  const CampaignReport r = campaign_modq(2, 10, {2, 3, 5});
  EXPECT_EQ(r.instances.size(), 30u);
  EXPECT_TRUE(r.ok());
  for (const auto& i : r.instances) EXPECT_GT(i.data["images_checked"].get<int>(), 0);
}

TEST(PresentationCampaignTest, BraidAndSteinberg) {
  const CampaignReport r = campaign_presentations({3, 5}, {3, 3});
  EXPECT_EQ(r.instances.size(), 4u);
  EXPECT_TRUE(r.ok());
  const auto& b3 = find(r, "B_3");
  EXPECT_EQ(b3.verdict, Verdict::pass);
  EXPECT_EQ(b3.data["xi_q"], "1");
  EXPECT_EQ(b3.data["xi_z"], "1");
  EXPECT_EQ(b3.data["xi_z2"], "1");
  EXPECT_EQ(find(r, "B_4").data["row_shape"], true);
  EXPECT_EQ(find(r, "St_3").data["row_shape"], true);
  EXPECT_TRUE(campaign_presentations({3, 2}, {4, 3}).instances.empty());
}

TEST(LemmaCampaignTest, Deterministic) {
  const CampaignReport a = campaign_lemma_oracle(4, 30);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.to_json(), campaign_lemma_oracle(4, 30).to_json());
}

TEST(AlgebraCampaignTest, IncidenceKernelAndSubstrate) {
  EXPECT_TRUE(campaign_incidence_kernel(9, 50).ok());
  const CampaignReport s = campaign_substrate(9, 60, 20);
  EXPECT_EQ(s.instances.size(), 80u);
  EXPECT_TRUE(s.ok());
}

TEST(ReportTest, CsvQuotesData) {
  CampaignReport r;
  r.campaign = "demo";
  auto& rec = r.add("a, b");
  rec.verdict = Verdict::fail;
  rec.data = {{"x", "1/2"}};
  const std::string csv = r.to_csv();
  EXPECT_NE(csv.find("\"a, b\",fail"), std::string::npos);
  EXPECT_NE(csv.find("\"{\"\"x\"\":\"\"1/2\"\"}\""), std::string::npos);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.to_json()["totals"]["failed"], 1);
}

}  // namespace
}  // namespace explab
