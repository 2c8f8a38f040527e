#include <gtest/gtest.h>

#include <cstdlib>

#include "cli.hpp"
#include "support.hpp"

using kf::io::json;
using kf::test::fixture;

namespace {

kf::cli::RunResult kf_run(std::vector<std::string> args) { return kf::cli::run(args); }

json run_json(std::vector<std::string> args, int expect_exit = 0) {
  args.insert(args.begin(), "--json");
  kf::cli::RunResult r = kf_run(args);
  EXPECT_EQ(r.exit_code, expect_exit) << r.err;
  return json::parse(r.out);
}

// Value printed after `key` on its own text line.
std::string text_field(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) != 0) continue;
    size_t p = line.find_first_not_of(' ', key.size());
    return p == std::string::npos ? "" : line.substr(p);
  }
  return "<missing>";
}

}  // namespace

TEST(Cli, AnalyzeExitCodes) {
  EXPECT_EQ(kf_run({"analyze", fixture("example64.json")}).exit_code, 0);
  EXPECT_EQ(kf_run({"analyze", fixture("example62-b0.json")}).exit_code, 1);
  EXPECT_EQ(kf_run({"analyze", fixture("example63-identity.json")}).exit_code, 1);
  EXPECT_EQ(kf_run({"analyze", fixture("no-such-file.json")}).exit_code, 2);
  EXPECT_EQ(kf_run({"analyze"}).exit_code, 2);
  EXPECT_EQ(kf_run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(kf_run({"analyze", fixture("example64-X.json")}).exit_code, 2);
}

TEST(Cli, AnalyzeTextAndJsonAgree) {
  for (const char* f : {"example63.json", "example64.json", "example65.json"}) {
    json j = run_json({"analyze", fixture(f)});
    std::string text = kf_run({"analyze", fixture(f)}).out;
    for (const char* key : {"cond_a", "is_nevanlinna", "is_full"})
      EXPECT_EQ(text_field(text, key), j[key].get<bool>() ? "true" : "false") << f << " " << key;
    for (const char* key : {"n", "plus", "minus", "smith_rank", "dom_dim", "defect"})
      EXPECT_EQ(text_field(text, key), std::to_string(j[key].get<int>())) << f << " " << key;
    EXPECT_EQ(text_field(text, "cond_b").substr(0, j["cond_b"]["kind"].get<std::string>().size()),
              j["cond_b"]["kind"].get<std::string>());
  }
}

TEST(Cli, AnalyzeExample64Report) {
  json j = run_json({"analyze", fixture("example64.json")});
  EXPECT_TRUE(j["cond_a"].get<bool>());
  EXPECT_EQ(j["cond_b"]["kind"], "holds-everywhere");
  EXPECT_EQ(j["defect"], 3);
  EXPECT_EQ(j["degrees"], json({2, 1, 1}));
  EXPECT_TRUE(j["is_full"].get<bool>());
}

TEST(Cli, NegsqTextAndJsonAgree) {
  json j = run_json({"negsq", fixture("example64-kernel.json")});
  std::string text = kf_run({"negsq", fixture("example64-kernel.json")}).out;
  for (const char* key : {"plus", "minus", "zero", "rank"})
    EXPECT_EQ(text_field(text, key), std::to_string(j[key].get<int>())) << key;
  EXPECT_EQ(j["minus"], 2);
  EXPECT_EQ(j["rank"], 4);
}

TEST(Cli, VerifyPair) {
  std::vector<std::string> ok{"verify-pair", "--kernel", fixture("example64-kernel.json"), "--m",
                              fixture("example64-X.json"), "--n", fixture("example64-Y.json")};
  EXPECT_EQ(kf_run(ok).exit_code, 0);
  std::vector<std::string> swapped{"verify-pair", "--kernel", fixture("example64-kernel.json"), "--m",
                                   fixture("example64-Y.json"), "--n", fixture("example64-X.json")};
  EXPECT_EQ(kf_run(swapped).exit_code, 1);
  json j = run_json(ok);
  EXPECT_TRUE(j["verified"].get<bool>());
}

TEST(Cli, PairKernel) {
  json j = run_json({"pair-kernel", "--m", fixture("example65-X.json"), "--n", fixture("example65-Y.json")});
  EXPECT_EQ(kf::io::kernel_from(j), kf::test::load("example65-kernel.json").kernel());
}

TEST(Cli, DecomposeAndErrors) {
  json j = run_json({"decompose", "--check", fixture("example65.json")});
  EXPECT_EQ(j["degrees"], json({1, 0, 0}));
  kf::cli::RunResult r = kf_run({"--json", "decompose", fixture("counterexample.json")});
  EXPECT_EQ(r.exit_code, 1);
  json e = json::parse(r.err);
  EXPECT_EQ(e["error"]["code"], "RangeConditionFails");
}

TEST(Cli, SmithAndForney) {
  json s = run_json({"smith", fixture("example64-pair.json")});
  EXPECT_EQ(s["l"], 3);
  json f = run_json({"forney", fixture("example64-pair.json")});
  EXPECT_EQ(f["forney"], json({2, 1, 1}));
}

TEST(Cli, PairExample64) {
  json j = run_json({"pair", fixture("example64.json"), "--extension", fixture("example64-A.json"), "--mu", "0,1",
                     "--gamma", fixture("example64-gamma.json"), "--q0", fixture("example64-q0.json")});
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(kf::io::matpoly_from(j["M"]), kf::test::load("example64-X.json").matpoly());
  EXPECT_EQ(kf::io::matpoly_from(j["N"]), kf::test::load("example64-Y.json").matpoly());
}

TEST(Cli, SynthDeclineAndPair) {
  json j = run_json({"synth", "--pair", fixture("example64.json")});
  EXPECT_TRUE(j["full"].get<bool>());
  EXPECT_EQ(j["forney"], json({2, 1, 1}));
}

TEST(Cli, PropcheckSeeded) {
  json a = run_json({"propcheck", "inertia", "--seed", "7", "--trials", "5"});
  json b = run_json({"propcheck", "inertia", "--seed", "7", "--trials", "5"});
  EXPECT_EQ(a["suites"][0]["passed"], 5);
  EXPECT_EQ(a["suites"][0]["passed"], b["suites"][0]["passed"]);
  EXPECT_EQ(kf_run({"propcheck", "nope"}).exit_code, 2);
}
