#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "explab/harness/cli.hpp"

namespace explab {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("explab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  json out_json() const { return json::parse(out_.str()); }
  json err_json() const { return json::parse(err_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, SpanCheck) {
  ASSERT_EQ(run({"span-check", file("g.mat", "2 2\n1 1\n1 3\n")}), 0);
  const json j = out_json();
  EXPECT_EQ(j["spanned"], false);
  EXPECT_EQ(j["witness_subset"], json({1, 2}));
  EXPECT_EQ(j["witness_vector"], json({1, 2}));
  ASSERT_EQ(run({"span-check", file("h.mat", "2 2\n0 1\n1 5\n")}), 0);
  EXPECT_EQ(out_json()["spanned"], true);
  EXPECT_TRUE(out_json()["witness_subset"].is_null());
  EXPECT_EQ(out_json()["subsets_checked"], 3);
}

TEST_F(CliTest, SpanCheckCap) {
  EXPECT_EQ(run({"span-check", "--max-subsets", "2", file("g.mat", "1 2\n1 1\n")}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "cap_exceeded");
}

TEST_F(CliTest, XiAllRings) {
  const auto a = file("a.mat", "1 2\n1 2\n");
  const auto v = file("v.txt", "1\n");
  ASSERT_EQ(run({"xi", "--ring", "q", "--target", v, a}), 0);
  EXPECT_EQ(out_json()["value"], "1/2");
  EXPECT_EQ(out_json()["ring"], "Q");
  ASSERT_EQ(run({"xi", "--ring", "z", "--target", v, a}), 0);
  EXPECT_EQ(out_json()["value"], "1");
  EXPECT_EQ(out_json()["exact"], true);
  ASSERT_EQ(run({"xi", "--ring", "zq", "--modulus", "3", "--target", v, a}), 0);
  EXPECT_EQ(out_json()["value"], "1");
  EXPECT_EQ(out_json()["solver"], "coset_bruteforce");
  ASSERT_EQ(run({"xi-zq", "--modulus", "2", "--target", v, a}), 0);
  EXPECT_EQ(out_json()["ring"], "Zq(2)");
}

TEST_F(CliTest, XiGlobal) {
  const auto a = file("a.mat", "2 3\n1 -1 0\n0 1 -1\n");
  ASSERT_EQ(run({"xi-global", "--ring", "q", a}), 0);
  const json q = out_json();
  ASSERT_EQ(run({"xi-global", "--ring", "z", a}), 0);
  EXPECT_EQ(out_json()["value"], q["value"]);
  EXPECT_EQ(out_json()["exact"], true);
  ASSERT_EQ(run({"xi-zq", "--modulus", "2", a}), 0);
  EXPECT_EQ(out_json()["exact"], true);
}

TEST_F(CliTest, ErrorsAreJson) {
  const auto a = file("a.mat", "1 2\n1 -1\n");
  EXPECT_EQ(run({"xi", "--target", file("v.txt", "1 2\n"), a}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "dimension_mismatch");
  EXPECT_EQ(run({"xi", "--target", file("z.txt", "0\n"), a}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "zero_target");
  EXPECT_EQ(run({"xi", "--ring", "zq", "--modulus", "4", "--target", file("w.txt", "1\n"), a}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "not_prime");
  EXPECT_EQ(run({"span-check", file("bad.mat", "2 2\n1 x\n0 1\n")}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "parse_error");
  EXPECT_EQ(err_json()["error"]["line"], 2);
  EXPECT_EQ(run({"span-check", (dir_ / "missing.mat").string()}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "io_error");
  EXPECT_EQ(run({"xi", "--ring", "r", "--target", "v", a}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "usage");
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("span-check"), std::string::npos);
}

TEST_F(CliTest, NotInIntegerImage) {
  const auto a = file("a.mat", "1 1\n2\n");
  EXPECT_EQ(run({"xi", "--ring", "z", "--target", file("v.txt", "1\n"), a}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "not_in_integer_image");
  EXPECT_EQ(err_json()["error"]["rational_value"], "1/2");
}

TEST_F(CliTest, BuildComplexFromGraph) {
  const auto g = file("g.txt", "3 3\n1 2\n2 3\n3 1\n");
  const auto out = (dir_ / "tri").string();
  ASSERT_EQ(run({"build-complex", "--graph", g, "--d1", file("d1.mat", "1 3\n1 1 1\n"), "--out", out}), 0);
  EXPECT_EQ(out_json()["h1_trivial"], true);
  EXPECT_EQ(out_json()["faces"], 1);
  EXPECT_TRUE(fs::exists(dir_ / "tri" / "d0.mat"));
  EXPECT_EQ(run({"build-complex", "--graph", g, "--d1", file("bad.mat", "1 3\n1 1 0\n"), "--out", out}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "cochain_condition");
}

TEST_F(CliTest, BuildComplexFromPresentation) {
  const auto p = file("p.txt", "gens: s1 s2; rel: s1 s2 s1 s2^-1 s1^-1 s2^-1\n");
  const auto out = (dir_ / "b3").string();
  ASSERT_EQ(run({"build-complex", "--presentation", p, "--out", out}), 0);
  EXPECT_EQ(out_json()["vertices"], 1);
  EXPECT_EQ(out_json()["h1_trivial"], false);
  std::ifstream d1(dir_ / "b3" / "d1.mat");
  std::string text((std::istreambuf_iterator<char>(d1)), {});
  EXPECT_EQ(text, "1 2\n1 -1\n");
  EXPECT_EQ(run({"build-complex", "--presentation", file("q.txt", "gens: a; rel: b\n"), "--out", out}), 2);
  EXPECT_EQ(err_json()["error"]["kind"], "parse_error");
}

TEST_F(CliTest, VerifyCampaigns) {
  const auto report = (dir_ / "r.json").string();
  ASSERT_EQ(run({"verify", "equality", "--seed", "3", "--count", "4", "--out", report}), 0);
  EXPECT_EQ(out_json()["failed"], 0);
  std::ifstream in(report);
  const json full = json::parse(in);
  EXPECT_EQ(full["campaign"], "equality");
  EXPECT_EQ(full["seed"], 3);
  ASSERT_EQ(run({"verify", "modq", "--count", "2", "--primes", "2,3"}), 0);
  EXPECT_EQ(out_json()["instances"].size(), 4u);
  ASSERT_EQ(run({"verify", "presentations", "--n-range", "3..4", "--steinberg-range", "3",
                 "--format", "csv"}),
            0);
  EXPECT_EQ(out_.str().rfind("campaign,seed,index", 0), 0u);
  ASSERT_EQ(run({"verify", "cw"}), 0);
  ASSERT_EQ(run({"verify", "lemma-oracle", "--count", "5"}), 0);
  ASSERT_EQ(run({"verify", "incidence-kernel", "--count", "5"}), 0);
  ASSERT_EQ(run({"verify", "substrate", "--count", "5", "--tiny-count", "2"}), 0);
  EXPECT_EQ(run({"verify", "nonsense"}), 2);
  EXPECT_EQ(run({"verify", "presentations", "--n-range", "x..y"}), 2);
}

TEST_F(CliTest, VerifyCwFromFiles) {
  fs::create_directories(dir_ / "circle");
  std::ofstream(dir_ / "circle" / "d0.mat") << "1 1\n0\n";
  std::ofstream(dir_ / "circle" / "d1.mat") << "0 1\n";
  ASSERT_EQ(run({"verify", "cw", "--complex", (dir_ / "circle").string()}), 0);
  EXPECT_EQ(out_json()["totals"]["skipped"], 1);
}

}  // namespace
}  // namespace explab
