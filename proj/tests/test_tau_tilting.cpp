#include <gtest/gtest.h>

#include "tautilt/tau_tilting.hpp"
#include "test_util.hpp"

using namespace tautilt;
using namespace tautilt::testing;

TEST(TauRigid, SmallExamples) {
  auto a2 = load_algebra("a2");
  EXPECT_TRUE(is_tau_rigid_pair(simple(*a2, 0), {1}));
  EXPECT_FALSE(is_tau_rigid_pair(direct_sum(simple(*a2, 0), simple(*a2, 1)), {}));
  for (const char* name : {"a3", "loop_x2", "kronecker", "comm_square"}) {
    auto alg = load_algebra(name);
    EXPECT_TRUE(is_tau_rigid_pair(initial_pair(*alg).module_sum(), {})) << name;
  }
}

TEST(TauRigid, InitialPairs) {
  auto a2 = load_algebra("a2");
  auto t = initial_pair(*a2);
  EXPECT_EQ(t.size(), 2);
  EXPECT_EQ(t.key(), (PairKey{{0, 1}, {1, 0}}));
  EXPECT_FALSE(pair_defect(t));
  EXPECT_EQ(initial_pair(*load_algebra("a3")).num_modules(), 3);
  auto loop = initial_pair(*load_algebra("loop_x2"));
  EXPECT_EQ(loop.size(), 1);
  EXPECT_FALSE(pair_defect(empty_support_pair(*a2)));
}

TEST(Mutation, A2Examples) {
  auto a2 = load_algebra("a2");
  auto t = initial_pair(*a2);
  // slots in canonical order: P(2) (dim 1) then P(1)
  ASSERT_EQ(t.module(0).dims(), (std::vector<int>{0, 1}));
  auto at_p2 = mutate(t, 0);
  EXPECT_EQ(at_p2.num_modules(), 2);
  EXPECT_EQ(at_p2.key(), (PairKey{{1, -1}, {1, 0}}));  // P(1) + S(1)
  auto at_p1 = mutate(t, 1);
  EXPECT_EQ(at_p1.num_modules(), 1);
  EXPECT_EQ(at_p1.module(0).dims(), (std::vector<int>{0, 1}));
  EXPECT_EQ(at_p1.projectives(), std::vector<int>{0});
  // projective slot of (S(2), {P(1)}) goes back up
  auto up = mutate(at_p1, 1);
  EXPECT_EQ(up.key(), t.key());
}

TEST(Mutation, Involutive) {
  for (const char* name : {"a3", "comm_square", "loop_x2", "d4"}) {
    auto alg = load_algebra(name);
    auto t = initial_pair(*alg);
    for (int s = 0; s < t.size(); ++s) {
      auto r = mutate(t, s);
      int ex = exchanged_slot(t, r);
      ASSERT_GE(ex, 0);
      EXPECT_EQ(mutate(r, ex).key(), t.key()) << name;
    }
  }
}

TEST(ExchangeGraph, SmallCounts) {
  auto a1 = load_algebra("a1");
  auto g1 = exchange_graph(*a1);
  EXPECT_TRUE(g1.closed());
  EXPECT_EQ(g1.nodes.size(), 2u);
  EXPECT_EQ(g1.edges.size(), 1u);
  auto a2 = load_algebra("a2");
  auto g2 = exchange_graph(*a2);
  EXPECT_TRUE(g2.closed());
  EXPECT_EQ(g2.nodes.size(), 5u);
  EXPECT_EQ(g2.edges.size(), 5u);
  auto loop = load_algebra("loop_x2");
  auto gl = exchange_graph(*loop);
  EXPECT_EQ(gl.nodes.size(), 2u);
  auto a3 = load_algebra("a3");
  EXPECT_EQ(exchange_graph(*a3).nodes.size(), 14u);
}

TEST(ExchangeGraph, KroneckerIsInfinite) {
  auto kr = load_algebra("kronecker");
  auto g = exchange_graph(*kr, {20, 64});
  EXPECT_EQ(g.status, GraphStatus::kCutoffPairs);
  EXPECT_EQ(g.nodes.size(), 20u);
}
