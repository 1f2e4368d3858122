#include <gtest/gtest.h>

#include "tautilt/explorer.hpp"
#include "test_util.hpp"

using namespace tautilt;
using namespace tautilt::testing;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Analyze, A1) {
  auto a1 = load_algebra("a1");
  auto r = analyze(*a1);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.pairs.size(), 2u);
  EXPECT_EQ(r.max_brick_length, 1);
  for (const auto& p : r.pairs) EXPECT_EQ(p.bricks.at(0).dimension_vector, (IntVector{1}));
  auto dot = export_dot(r);
  EXPECT_EQ(count(dot, "[label="), 3u);
  EXPECT_EQ(count(dot, " -- "), 1u);
  EXPECT_NE(dot.find("n0 -- n1 [label=\"[1]\"]"), std::string::npos);
}

TEST(Analyze, A2FiveCycle) {
  auto a2 = load_algebra("a2");
  auto r = analyze(*a2);
  EXPECT_TRUE(r.all_passed()) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_TRUE(r.tau_tilting_finite());
  EXPECT_EQ(r.pairs.size(), 5u);
  EXPECT_EQ(r.edges.size(), 5u);
  EXPECT_EQ(r.max_brick_length, 2);
  auto dot = export_dot(r);
  EXPECT_EQ(count(dot, " -- "), 5u);
  for (int i = 0; i < 5; ++i) {
    std::string id = "n" + std::to_string(i);
    EXPECT_EQ(count(dot, id + " -- ") + count(dot, "-- " + id + " "), 2u);
  }
  for (const auto& [name, t] : r.checks) {
    EXPECT_EQ(t.failed, 0u) << name;
    EXPECT_GT(t.passed, 0u) << name;
  }
}

TEST(Analyze, KroneckerCutoff) {
  auto k = load_algebra("kronecker");
  AnalysisOptions opt;
  opt.limits.max_pairs = 40;
  auto r = analyze(*k, opt);
  EXPECT_EQ(r.status(), GraphStatus::kCutoffPairs);
  EXPECT_FALSE(r.tau_tilting_finite());
  EXPECT_EQ(r.pairs.size(), 40u);
  EXPECT_TRUE(r.all_passed()) << (r.failures.empty() ? "" : r.failures[0]);
  auto j = to_json(r);
  EXPECT_TRUE(j["tau_tilting_finite"].is_null());
}

TEST(Analyze, JsonRoundTripAndThreads) {
  auto a3 = load_algebra("a3");
  AnalysisOptions one;
  one.threads = 1;
  one.ar_samples = 10;
  AnalysisOptions many = one;
  many.threads = 4;
  auto r1 = analyze(*a3, one);
  auto text = export_json(r1);
  EXPECT_EQ(Json::parse(text), to_json(r1));
  EXPECT_EQ(Json::parse(text).dump(2) + "\n", text);
  EXPECT_EQ(export_json(analyze(*a3, many)), text);
  EXPECT_EQ(export_json(analyze(*a3, one)), text);
}

TEST(LongBrick, Kronecker) {
  auto k = load_algebra("kronecker");
  ExchangeLimits lim;
  lim.max_pairs = 200;
  auto r = find_long_brick(*k, 3, lim);
  ASSERT_EQ(r.outcome, LongBrickOutcome::kFound);
  EXPECT_GE(r.length, 3);
  EXPECT_GE(r.certificate->composition_length(), 3);
  lim.max_pairs = 4;
  EXPECT_THROW(find_long_brick(*k, 50, lim), CutoffReached);
}

TEST(LongBrick, FiniteAlgebras) {
  auto a2 = load_algebra("a2");
  auto r = find_long_brick(*a2, 3);
  EXPECT_EQ(r.outcome, LongBrickOutcome::kNotFound);
  EXPECT_EQ(r.pairs_explored, 5u);
  auto a3 = load_algebra("a3");
  auto r3 = find_long_brick(*a3, 4);
  EXPECT_EQ(r3.outcome, LongBrickOutcome::kNotFound);
  EXPECT_EQ(r3.pairs_explored, 14u);
  for (const char* name : {"a1", "a3", "loop_x2", "comm_square", "d4"}) {
    auto alg = load_algebra(name);
    auto one = find_long_brick(*alg, 1);
    EXPECT_EQ(one.outcome, LongBrickOutcome::kFound) << name;
    EXPECT_EQ(one.pair, initial_pair(*alg).key()) << name;
  }
  EXPECT_THROW(find_long_brick(*a2, 0), std::invalid_argument);
}
