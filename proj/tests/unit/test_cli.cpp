#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqcc/cli.hpp"

namespace gqcc::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gqcc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(GQCC_TEST_DATA_DIR) + "/" + f; }
std::string corpus(const std::string& f) { return std::string(GQCC_CORPUS_DIR) + "/" + f; }

std::size_t count_records(const Json& report, const std::string& needle) {
  std::size_t n = 0;
  for (const auto& r : report["records"])
    if (r["name"].get<std::string>().find(needle) != std::string::npos) ++n;
  return n;
}

TEST(Cli, ValidateTriangle) {
  const auto r = invoke({"validate", "--graph", data("triangle.txt")});
  EXPECT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["schema"], "qcc-report/1");
  EXPECT_EQ(j["config"]["subcommand"], "validate");
  EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Cli, ValidateDeadEndAndLoop) {
  const auto a = invoke({"validate", "--graph", data("path2.txt")});
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.json()["records"][0]["observed"]["error"], "ValidationError::DeadEnd");
  const auto b = invoke({"validate", "--graph", data("loop.txt")});
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.json()["records"][0]["observed"]["error"], "ValidationError::Loop");
  const auto c = invoke({"validate", "--graph", data("missing.txt")});
  EXPECT_EQ(c.code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"validate"}).code, 2);
  EXPECT_EQ(invoke({"qcc-check", "--graph", corpus("k4.txt")}).code, 2);
  EXPECT_EQ(invoke({"qcc-check", "--graph", corpus("k4.txt"), "--z", "two"}).code, 2);
  EXPECT_EQ(invoke({"tree", "--graph", corpus("k4.txt"), "--base", "0", "--radius", "1", "--z", "2"}).code, 2);
  EXPECT_EQ(invoke({"tree", "--graph", corpus("k4.txt"), "--base", "9", "--z", "2"}).code, 2);
  EXPECT_EQ(invoke({"tree", "--graph", corpus("k4.txt"), "--base", "0", "--z", "2", "--measure", "lumpy"}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--graph", corpus("k4.txt"), "--exact", "--numeric"}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--graph", corpus("k4.txt"), "--tol", "0"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, QccCheckK4) {
  const auto r = invoke({"qcc-check", "--graph", corpus("k4.txt"), "--all-eigenvalues", "--formulas"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(count_records(j, "dimension-formula"), 3u);
  EXPECT_GT(count_records(j, "generic z=2/1"), 0u);
  EXPECT_GT(count_records(j, "algebraic root of x^2 + x + 2"), 0u);
  EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Cli, QccCheckSingleParameters) {
  const auto a = invoke({"qcc-check", "--graph", corpus("k4.txt"), "--z", "2"});
  EXPECT_EQ(a.code, 0);
  const Json first = a.json()["records"][0];
  EXPECT_EQ(first["observed"]["vertex"], 1);
  EXPECT_EQ(first["observed"]["isomorphism"], "verified");
  EXPECT_EQ(invoke({"qcc-check", "--graph", corpus("c4.txt"), "--z", "0,1"}).code, 0);
  EXPECT_EQ(invoke({"qcc-check", "--graph", corpus("c6.txt"), "--z", "-1", "--numeric"}).code, 0);
  EXPECT_EQ(invoke({"qcc-check", "--graph", corpus("k4.txt"), "--z", "0"}).code, 1);
}

TEST(Cli, SpectrumOfC6) {
  const auto r = invoke({"spectrum", "--graph", corpus("c6.txt"), "--edge"});
  EXPECT_EQ(r.code, 0);
  const Json s = r.json()["records"][0]["observed"];
  EXPECT_EQ(s["size"], 12);
  ASSERT_EQ(s["eigenvalues"].size(), 6u);
  for (const auto& c : s["eigenvalues"]) EXPECT_EQ(c["multiplicity"], 2);
}

TEST(Cli, SpectrumEqualizers) {
  const auto r = invoke({"spectrum", "--graph", corpus("k4.txt"), "--vertex", "--z", "2"});
  EXPECT_EQ(r.code, 0);
  const Json rec = r.json()["records"][0];
  EXPECT_EQ(rec["observed"]["dimension"], 1);
  EXPECT_EQ(rec["observed"]["basis"][0], Json({"1/1", "1/1", "1/1", "1/1"}));
  EXPECT_EQ(invoke({"spectrum", "--graph", corpus("k4.txt"), "--vertex", "--z", "2", "--numeric"}).code, 0);
  EXPECT_EQ(invoke({"spectrum", "--graph", corpus("k4.txt"), "--numeric"}).code, 0);
}

TEST(Cli, Paths) {
  const auto r = invoke({"paths", "--graph", corpus("k4.txt"), "--depth", "2"});
  EXPECT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["records"][0]["observed"], "24");
  EXPECT_EQ(j["records"][1]["observed"].size(), 24u);
  EXPECT_EQ(j["records"][2]["observed"]["rows"], 24);
  EXPECT_EQ(count_records(j, "transfer-rank"), 1u);
  EXPECT_EQ(invoke({"paths", "--graph", corpus("k4.txt"), "--depth", "6", "--count-only"}).code, 0);
  EXPECT_EQ(invoke({"paths", "--graph", corpus("k4.txt"), "--depth", "7"}).code, 1);
}

TEST(Cli, Tree) {
  const auto r = invoke({"tree", "--graph", corpus("k4.txt"), "--base", "0", "--radius", "3", "--z", "1/2",
                         "--measure", "random:7"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.json()["records"][0]["observed"]["nodes"], 22);
  const auto single = invoke({"tree", "--graph", corpus("petersen.txt"), "--base", "3", "--z", "-2", "--measure",
                              "single:4", "--check", "factorization"});
  EXPECT_EQ(single.code, 0);
  EXPECT_EQ(invoke({"tree", "--graph", corpus("c5.txt"), "--base", "0", "--z", "1,1"}).code, 0);
}

TEST(Cli, Zeta) {
  const auto r = invoke({"zeta", "--graph", corpus("petersen.txt"), "--u", "1/3", "--u", "-2/7"});
  EXPECT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(count_records(j, "zeta u="), 2u);
  EXPECT_EQ(count_records(j, "branching-convention"), 1u);
  EXPECT_EQ(invoke({"zeta", "--graph", corpus("k4.txt"), "--seed", "9"}).code, 0);
}

TEST(Cli, CorpusManifests) {
  const auto empty = invoke({"corpus", "--manifest", data("empty_manifest.txt")});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.json()["records"].size(), 0u);
  const auto bad = invoke({"corpus", "--manifest", data("invalid_manifest.txt")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["summary"]["failed"], 1);
  EXPECT_GT(count_records(bad.json(), "triangle.txt/"), 0u);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"zeta", "--graph", corpus("k5.txt"), "--seed", "4"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> tree{"tree", "--graph", corpus("random_1.txt"), "--base", "0", "--z", "-2",
                                      "--measure", "random"};
  EXPECT_EQ(invoke(tree).out, invoke(tree).out);
}

TEST(Cli, OutAndCsv) {
  const auto dir = std::filesystem::temp_directory_path() / "gqcc_cli_test";
  std::filesystem::create_directories(dir);
  const auto json_path = (dir / "r.json").string(), csv_path = (dir / "r.csv").string();
  const auto r = invoke({"qcc-check", "--graph", corpus("c6.txt"), "--formulas", "--out", json_path, "--csv", csv_path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream j(json_path), c(csv_path);
  EXPECT_EQ(Json::parse(j)["summary"]["records"], 3);
  std::string header;
  std::getline(c, header);
  EXPECT_EQ(header, "name,mode,pass,observed,expected");
}

TEST(Cli, GenerateIsReproducible) {
  const std::vector<std::string> args{"generate", "--family", "random", "--n", "9", "--cyclomatic", "4", "--seed", "3"};
  const auto a = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, invoke(args).out);
  EXPECT_EQ(a.out.rfind("# random admissible graph", 0), 0u);
  EXPECT_EQ(invoke({"generate", "--family", "blob"}).code, 2);
}

}  // namespace
}  // namespace gqcc::cli
