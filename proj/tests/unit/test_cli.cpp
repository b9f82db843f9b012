#include <gtest/gtest.h>

#include <json.hpp>
#include <algorithm>
#include <cctype>
#include <sstream>

#include "homlie/cli.hpp"

using homlie::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 4 && a.ends_with(".hla")) a = std::string(HOMLIE_CORPUS_DIR) + "/" + a;
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Case {
  std::vector<std::string> args;
  int code;
};

void PrintTo(const Case& c, std::ostream* os) {
  for (const auto& a : c.args) *os << a << ' ';
  *os << "-> " << c.code;
}

}  // namespace

class CliCorpus : public ::testing::TestWithParam<Case> {};

TEST_P(CliCorpus, ExitCodeAndStableOutput) {
  const Case& c = GetParam();
  const Outcome first = run(c.args);
  EXPECT_EQ(first.code, c.code) << first.err;
  const Outcome second = run(c.args);
  EXPECT_EQ(second.out, first.out);
  if (c.code == 2) {
    const auto j = nlohmann::json::parse(first.err);
    EXPECT_TRUE(j.at("error").contains("kind"));
    EXPECT_TRUE(j.at("error").contains("message"));
  } else {
    const auto j = nlohmann::json::parse(first.out);
    EXPECT_EQ(j.at("tool_version"), homlie::kToolVersion);
    EXPECT_TRUE(j.at("checks").is_array());
    const bool has_file = std::any_of(c.args.begin(), c.args.end(), [](const std::string& a) { return a.ends_with(".hla"); });
    ASSERT_EQ(j.at("inputs").size(), has_file ? 1u : 0u);
    if (has_file) EXPECT_EQ(j.at("inputs")[0].at("sha256").get_ref<const std::string&>().size(), 64u);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Commands, CliCorpus,
    ::testing::Values(Case{{"check", "sl2.hla"}, 0}, Case{{"check", "abelian.hla"}, 0},
                      Case{{"check", "heisenberg.hla"}, 0}, Case{{"check", "hom_module.hla"}, 0},
                      Case{{"check", "gl2.hla"}, 0}, Case{{"check", "layout.hla"}, 0},
                      Case{{"check", "families.hla"}, 0}, Case{{"check", "bad_jacobi.hla"}, 1},
                      Case{{"check", "not_morphism.hla"}, 1}, Case{{"check", "sl2.hla", "--lie", "sl2"}, 0},
                      Case{{"check", "sl2.hla", "--hom", "alpha"}, 0},
                      Case{{"check", "not_morphism.hla", "--hom", "stretch"}, 1},
                      Case{{"twist", "sl2.hla", "--morphism", "alpha", "--induced"}, 0},
                      Case{{"killing", "sl2.hla", "--lie", "sl2"}, 0},
                      Case{{"decompose", "sl2_sum.hla", "--lie", "g"}, 0},
                      Case{{"cyclic", "sl2.hla", "--lie", "sl2", "--sigma", "alpha", "--n", "3"}, 0},
                      Case{{"rep", "verify", "sl2.hla", "--rep", "V2"}, 0},
                      Case{{"rep", "intertwiner", "intertwiner.hla", "--rep", "V3", "--morphism", "alpha"}, 0},
                      Case{{"rep", "intertwiner", "intertwiner.hla", "--rep", "V3", "--morphism", "stretch"}, 1},
                      Case{{"rep", "tensor", "tensor.hla", "--reps", "A", "--n", "1"}, 0},
                      Case{{"rep", "tensor", "tensor.hla", "--reps", "A,A", "--n", "2"}, 1},
                      Case{{"rep", "tensor", "tensor.hla", "--reps", "A,B,A", "--n", "3", "--sigma", "alpha"}, 2},
                      Case{{"rep", "tensor", "tensor.hla", "--reps", "A,A", "--n", "3"}, 2},
                      Case{{"sl2", "family", "finite", "--n", "3", "--lambda", "2", "--b0", "1", "--verify"}, 0},
                      Case{{"sl2", "family", "intermediate", "--tau", "1", "--mu", "0", "--lambda", "2", "--b0",
                            "1"},
                           2},
                      Case{{"sl2", "solve", "--eta0", "1", "--nu0", "2", "--mu1", "1", "--gamma0", "3", "--window",
                            "0:4"},
                           0},
                      Case{{"weights", "weights.hla", "--rep", "V", "--cartan", "h"}, 0},
                      Case{{"weights", "weights.hla", "--rep", "M", "--cartan", "h"}, 0},
                      Case{{"check", "invalid/missing_semicolon.hla"}, 2}, Case{{"check", "missing.hla"}, 2},
                      Case{{"frobnicate"}, 2}, Case{{"killing", "sl2.hla"}, 2}),
    [](const ::testing::TestParamInfo<Case>& info) {
      std::string name = std::to_string(info.index);
      for (const auto& a : info.param.args) {
        name += '_';
        for (char ch : a) name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
      }
      return name;
    });

TEST(Cli, Version) {
  const Outcome r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::string(homlie::kToolVersion) + "\n");
}

TEST(Cli, ParseErrorsCarryPositions) {
  const Outcome r = run({"check", "invalid/missing_semicolon.hla"});
  ASSERT_EQ(r.code, 2);
  const auto e = nlohmann::json::parse(r.err).at("error");
  EXPECT_EQ(e.at("kind"), "ParseError");
  EXPECT_EQ(e.at("line"), 1);
  EXPECT_TRUE(e.at("expected").is_array());
}

TEST(Cli, FailingCheckIsNamedInReport) {
  const Outcome r = run({"check", "bad_jacobi.hla"});
  ASSERT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  bool any_fail = false;
  for (const auto& c : j.at("checks")) any_fail = any_fail || c.at("status") == "fail";
  EXPECT_TRUE(any_fail);
}

TEST(Cli, SeedIsRecorded) {
  const Outcome a = run({"--seed", "5", "cyclic", "sl2.hla", "--lie", "sl2", "--sigma", "alpha", "--n", "2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(nlohmann::json::parse(a.out).at("seed"), 5);
}
