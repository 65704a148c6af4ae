#include "latdyn/groups.hpp"
#include "latdyn/rng.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace latdyn;

namespace {

struct Record {
  std::string kind;
  std::vector<std::string> fields;
};

std::vector<Record> load_vectors() {
  std::ifstream in(std::string(LATDYN_TEST_DATA_DIR) + "/rng_vectors.txt");
  std::vector<Record> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    Record r;
    ss >> r.kind;
    for (std::string f; ss >> f;) r.fields.push_back(f);
    out.push_back(std::move(r));
  }
  return out;
}

std::uint64_t u64(const std::string& s) { return std::stoull(s); }

}  // namespace

TEST(RngVectors, FileIsPresent) { EXPECT_GT(load_vectors().size(), 20u); }

TEST(RngVectors, SplitMix) {
  for (const auto& r : load_vectors()) {
    if (r.kind != "splitmix") continue;
    SplitMix64 sm(u64(r.fields[0]));
    for (std::size_t i = 1; i < r.fields.size(); ++i) EXPECT_EQ(sm.next(), u64(r.fields[i]));
  }
}

TEST(RngVectors, Xoshiro) {
  for (const auto& r : load_vectors()) {
    if (r.kind != "xoshiro") continue;
    Xoshiro256 g(u64(r.fields[0]));
    for (std::size_t i = 1; i < r.fields.size(); ++i) EXPECT_EQ(g(), u64(r.fields[i])) << "seed " << r.fields[0];
  }
}

TEST(RngVectors, Streams) {
  for (const auto& r : load_vectors()) {
    if (r.kind != "stream") continue;
    Xoshiro256 g = Xoshiro256::stream(u64(r.fields[0]), u64(r.fields[1]));
    for (std::size_t i = 2; i < r.fields.size(); ++i) EXPECT_EQ(g(), u64(r.fields[i]));
  }
}

TEST(RngVectors, Uniform01) {
  for (const auto& r : load_vectors()) {
    if (r.kind != "uniform01") continue;
    Xoshiro256 g(u64(r.fields[0]));
    for (std::size_t i = 1; i < r.fields.size(); ++i)
      EXPECT_EQ(uniform01(g), std::strtod(r.fields[i].c_str(), nullptr));
  }
}

TEST(RngVectors, TwoAtomWords) {
  const MeasureSpec mu = MeasureSpec::rational(
      "pm", {{make_u_plus(Rational(2)), 1, "u+(2)"}, {make_u_minus(Rational(2)), 1, "u-(2)"}}, false);
  int seen = 0;
  for (const auto& r : load_vectors()) {
    if (r.kind != "word2") continue;
    Xoshiro256 g(u64(r.fields[0]));
    const WordSample w = sample_word(mu, g, std::stoul(r.fields[1]));
    ASSERT_EQ(w.letters.size() + 2, r.fields.size());
    for (std::size_t i = 0; i < w.letters.size(); ++i) EXPECT_EQ(w.letters[i], std::stoul(r.fields[i + 2]));
    ++seen;
  }
  EXPECT_EQ(seen, 3);
}

TEST(Rng, UniformIndexInRangeAndRoughlyFlat) {
  Xoshiro256 g(3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto k = uniform_index(g, 7);
    ASSERT_LT(k, 7u);
    ++counts[k];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Rng, StandardNormalMoments) {
  Xoshiro256 g(5);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = standard_normal(g);
    s += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.02);
}
