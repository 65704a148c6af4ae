#include "latdyn/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = latdyn::cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> body_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("latdyn-cli-" + std::to_string(counter_++) + "-" +
                                                               std::to_string(std::rand()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

std::string slurp(const std::string& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  const Result r = run({"walk", "--case", "I"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--steps"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(run({"walk", "--case", "nope", "--steps", "3"}).code, 1);
  EXPECT_EQ(run({"walk", "--case", "I", "--steps", "3", "--x0", "1,2"}).code, 1);
  EXPECT_EQ(run({"cubic-units", "--poly", "x^3-x"}).code, 1);
  EXPECT_EQ(run({"cubic-units", "--poly", "x^3-2"}).code, 1);
  EXPECT_EQ(run({"aorbit", "--ratios", "1", "2"}).code, 1);
}

TEST(Cli, HeaderCarriesArgvAndSeed) {
  const Result r = run({"walk", "--case", "I", "--steps", "0", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# latdyn ", 0), 0u);
  EXPECT_NE(r.out.find("# argv: latdyn walk --case I --steps 0 --seed 7\n"), std::string::npos);
  EXPECT_NE(r.out.find("# seed: 7\n"), std::string::npos);
  EXPECT_EQ(body_lines(r.out), (std::vector<std::string>{"step,x,y,height", "0,0,1,1"}));
}

TEST(Cli, WalkStrideAndReproducibility) {
  const std::vector<std::string> args{"walk", "--case", "II-c", "--steps", "1000", "--stride", "100", "--seed", "3"};
  const Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(body_lines(a.out).size(), 12u);
  auto c = args;
  c.back() = "4";
  EXPECT_NE(body_lines(run(c).out), body_lines(a.out));
}

TEST(Cli, OrthoShapesAreThreadIndependent) {
  const Result a = run({"ortho-shapes", "--words", "300", "--threads", "1"});
  const Result b = run({"ortho-shapes", "--words", "300", "--threads", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(body_lines(a.out), body_lines(b.out));
  EXPECT_EQ(body_lines(a.out).size(), 301u);
}

TEST(Cli, SectionVerify) {
  const Result r = run({"section-verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t=inf: exact (both sides)\n"), std::string::npos);
  EXPECT_NE(r.out.find("1000/1000 exact\n"), std::string::npos);
}

TEST(Cli, SectionCurveClosesAtInfinity) {
  TempDir dir;
  const std::string summary = dir.file("s.json");
  const Result r = run({"section-curve", "--points", "50", "--summary", summary});
  ASSERT_EQ(r.code, 0);
  const auto rows = body_lines(r.out);
  ASSERT_EQ(rows.size(), 52u);
  EXPECT_EQ(rows.back().substr(0, 7), "50,inf,");
  const auto j = nlohmann::json::parse(slurp(summary));
  EXPECT_LT(j["endpoint_gap_plus"].get<double>(), 1e-3);
  EXPECT_LT(j["endpoint_gap_minus"].get<double>(), 1e-3);
}

TEST(Cli, OutputFileMatchesStdout) {
  TempDir dir;
  const std::string path = dir.file("w.csv");
  const Result to_file = run({"walk", "--case", "I", "--steps", "20", "-o", path});
  ASSERT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  const Result to_stdout = run({"walk", "--case", "I", "--steps", "20"});
  EXPECT_EQ(body_lines(slurp(path)), body_lines(to_stdout.out));
}

TEST(Cli, ConfigFileWithCommandLineOverride) {
  TempDir dir;
  const std::string cfg = dir.file("w.cfg", "# walk\ncase = II-b\nsteps=50\nstride = 5 # every fifth\nseed=3\n");
  const Result a = run({"walk", "--config", cfg});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(body_lines(a.out).size(), 12u);
  EXPECT_NE(a.out.find("# config: case=II-b steps=50 stride=5 seed=3\n"), std::string::npos);
  EXPECT_EQ(body_lines(a.out), body_lines(run({"walk", "--case", "II-b", "--steps", "50", "--stride", "5", "--seed", "3"}).out));

  const Result b = run({"walk", "--config", cfg, "--steps", "10"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(body_lines(b.out).size(), 4u);

  EXPECT_EQ(run({"walk", "--config", dir.file("bad.cfg", "bogus=1\n"), "--case", "I", "--steps", "1"}).code, 1);
  EXPECT_EQ(run({"walk", "--config", dir.file("bad2.cfg", "steps\n")}).code, 1);
  EXPECT_EQ(run({"walk", "--config", dir.file("missing.cfg")}).code, 1);
}

TEST(Cli, ConfigListValues) {
  TempDir dir;
  const std::string cfg = dir.file("a.cfg", "ratios = 1+sqrt(2) 1-sqrt(2) sqrt(2)\nt-max = 2\ngrid = 5\n");
  const Result r = run({"aorbit", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body_lines(r.out).size(), 26u);
}

TEST(Cli, CfJson) {
  const Result r = run({"cf", "--x", "649/200", "--x", "sqrt(2)", "--terms", "5"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["header"]["tool"], "latdyn");
  EXPECT_EQ(j["header"]["schema"], "cf/1");
  ASSERT_EQ(j["expansions"].size(), 2u);
  EXPECT_EQ(j["expansions"][0]["terms"], nlohmann::json::parse("[3,4,12,4]"));
  EXPECT_EQ(j["expansions"][1]["terms"], nlohmann::json::parse("[1,2,2,2,2]"));
}

TEST(Cli, CubicUnitsFindsAlphaAndOnePlusAlpha) {
  const Result r = run({"cubic-units", "--poly", "x^3-3x-1", "--bound", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["log_embedding_rank"], 2);
  bool alpha = false, one_plus = false;
  for (const auto& u : j["units"]) {
    alpha = alpha || u["coords"] == nlohmann::json::parse("[0,1,0]");
    one_plus = one_plus || u["coords"] == nlohmann::json::parse("[1,1,0]");
  }
  EXPECT_TRUE(alpha);
  EXPECT_TRUE(one_plus);
}

TEST(Cli, ConditionedRoutesAgree) {
  TempDir dir;
  const std::string summary = dir.file("c.json");
  const Result r = run({"conditioned", "--poly", "x^3-3x-1", "--units", "0,1,0", "1,1,0", "--range", "2", "--summary", summary});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body_lines(r.out).size(), 26u);
  const auto j = nlohmann::json::parse(slurp(summary));
  EXPECT_LT(j["max_route_gap"].get<double>(), 1e-6);
}
