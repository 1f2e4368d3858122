#include <gtest/gtest.h>

#include "tautilt/gc_vectors.hpp"
#include "test_util.hpp"

using namespace tautilt;
using namespace tautilt::testing;

namespace {

IntMatrix identity_int(int n) {
  IntVector ones(n, 1);
  return diagonal(ones);
}

}  // namespace

TEST(GcMatrices, ExplicitExample) {
  IntMatrix g = IntMatrix::from_columns(std::vector<IntVector>{{1, 0}, {1, -1}});
  IntMatrix c = c_matrix(g);
  EXPECT_EQ(c.column(0), (IntVector{1, 1}));
  EXPECT_EQ(c.column(1), (IntVector{0, -1}));
  EXPECT_EQ(c, IntMatrix::from_columns(std::vector<IntVector>{{1, 1}, {0, -1}}));
}

TEST(GcMatrices, InitialAndEmptySupport) {
  for (const char* name : {"a2", "a3", "kronecker", "loop_x2"}) {
    auto alg = load_algebra(name);
    const int n = alg->num_vertices();
    auto t = initial_pair(*alg);
    EXPECT_EQ(c_matrix(t) * g_matrix(t).transpose(), identity_int(n)) << name;
    // G of (A, 0) is the identity up to column order
    EXPECT_EQ(abs(integer_determinant(g_matrix(t))), 1) << name;
    auto z = empty_support_pair(*alg);
    IntVector minus(n, -1);
    EXPECT_EQ(g_matrix(z), diagonal(minus)) << name;
    EXPECT_EQ(c_matrix(z), diagonal(minus)) << name;
  }
}

TEST(GcMatrices, A2PairWithSimple) {
  auto a2 = load_algebra("a2");
  TauTiltingPair t(*a2, {projective(*a2, 0), simple(*a2, 0)}, {});
  ASSERT_FALSE(pair_defect(t));
  // slots: S(1) with g = (1,-1), then P(1) with g = (1,0)
  EXPECT_EQ(t.g_vector_of(0), (IntVector{1, -1}));
  EXPECT_EQ(t.g_vector_of(1), (IntVector{1, 0}));
  IntMatrix c = c_matrix(t);
  EXPECT_EQ(c.column(0), (IntVector{0, -1}));
  EXPECT_EQ(c.column(1), (IntVector{1, 1}));
}

TEST(InnerProduct, Weighted) {
  EXPECT_EQ(inner_product(IntVector{1, 1}, IntVector{1, 1}, IntVector{1, 2}), 3);
  IntVector d{1, 2};
  EXPECT_EQ(inner_product(IntVector{1, 1}, IntVector{1, 1}, diagonal(d)), 3);
  EXPECT_THROW(inner_product(IntVector{1}, IntVector{1, 1}, IntVector{1, 1}), std::invalid_argument);
  auto loop = load_algebra("loop_x2");
  EXPECT_EQ(d_vector(*loop), (IntVector{1}));
}

TEST(SignCoherence, Basic) {
  EXPECT_TRUE(is_sign_coherent({0, 0}));
  EXPECT_TRUE(is_sign_coherent({2, 0, 1}));
  EXPECT_TRUE(is_sign_coherent({-1, -3}));
  EXPECT_FALSE(is_sign_coherent({1, -1}));
}

TEST(ArFormula, A2Examples) {
  auto a2 = load_algebra("a2");
  auto s1 = simple(*a2, 0), s2 = simple(*a2, 1), p1 = projective(*a2, 0);
  auto r = verify_ar_formula(s1, s1);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_TRUE(r.equal);
  r = verify_ar_formula(s1, s2);
  EXPECT_EQ(r.lhs, -1);
  EXPECT_EQ(r.rhs, -1);
  r = verify_ar_formula(s1, p1);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_TRUE(r.equal);
}

TEST(ArFormula, AllIndecomposablePairsSmall) {
  for (const char* name : {"a3", "loop_x2", "comm_square"}) {
    auto alg = load_algebra(name);
    std::vector<Representation> mods;
    for (int i = 0; i < alg->num_vertices(); ++i) {
      mods.push_back(projective(*alg, i));
      mods.push_back(injective(*alg, i));
      mods.push_back(simple(*alg, i));
    }
    for (const auto& m : mods)
      for (const auto& n : mods) EXPECT_TRUE(verify_ar_formula(m, n).equal) << name;
  }
}

TEST(SignCoherence, DynkinGraphs) {
  for (const char* name : {"a2", "a3", "d4", "comm_square"}) {
    auto alg = load_algebra(name);
    auto g = exchange_graph(*alg, {}, 1);
    ASSERT_TRUE(g.closed());
    for (const auto& [k, t] : g.nodes) {
      IntMatrix c = c_matrix(t);
      EXPECT_EQ(c * g_matrix(t).transpose(), identity_int(t.size()));
      for (int s = 0; s < t.size(); ++s) EXPECT_TRUE(is_sign_coherent(c.column(s))) << name;
    }
  }
}
