#include <gtest/gtest.h>

#include "tautilt/auslander_reiten.hpp"
#include "tautilt/hom.hpp"
#include "tautilt/presentation.hpp"
#include "test_util.hpp"

using namespace tautilt;
using namespace tautilt::testing;

TEST(Presentation, SimplesOfA2) {
  auto alg = load_algebra("a2");
  auto s1 = simple(*alg, 0), s2 = simple(*alg, 1);
  EXPECT_EQ(g_vector(s1), (IntVector{1, -1}));
  EXPECT_EQ(g_vector(s2), (IntVector{0, 1}));
  EXPECT_TRUE(is_projective(s2));
  EXPECT_FALSE(is_projective(s1));
  EXPECT_TRUE(is_projective(projective(*alg, 0)));
}

TEST(Presentation, LoopSimple) {
  auto alg = load_algebra("loop_x2");
  auto s = simple(*alg, 0);
  EXPECT_EQ(g_vector(s), IntVector{0});
  EXPECT_EQ(g_vector(projective(*alg, 0)), IntVector{1});
}

TEST(Hom, ProjectiveIsVertexSpace) {
  for (const char* name : {"a3", "d4", "comm_square", "kronecker", "loop_x2"}) {
    auto alg = load_algebra(name);
    for (int i = 0; i < alg->num_vertices(); ++i)
      for (int j = 0; j < alg->num_vertices(); ++j) {
        auto pi = projective(*alg, i), ij = injective(*alg, j);
        EXPECT_EQ(hom_dim(pi, ij), static_cast<std::size_t>(pi.dim(j))) << name;
        EXPECT_EQ(hom_dim(projective(*alg, j), pi), static_cast<std::size_t>(pi.dim(j))) << name;
      }
  }
}

TEST(Hom, BasisMapsAreModuleMaps) {
  auto alg = load_algebra("comm_square");
  std::vector<Representation> mods;
  for (int i = 0; i < 4; ++i) {
    mods.push_back(projective(*alg, i));
    mods.push_back(injective(*alg, i));
    mods.push_back(simple(*alg, i));
  }
  for (const auto& m : mods)
    for (const auto& n : mods) {
      auto basis = hom_space(m, n);
      EXPECT_EQ(basis.size(), hom_dim(m, n));
      for (const auto& f : basis) EXPECT_TRUE(f.intertwines(m, n));
      if (!basis.empty()) {
        std::vector<std::vector<Rational>> cols;
        for (const auto& f : basis) cols.push_back(f.flatten());
        EXPECT_EQ(rank(Matrix::from_columns(cols[0].size(), cols)), basis.size());
      }
    }
}

TEST(AuslanderReiten, TranslatesOfSimples) {
  auto a2 = load_algebra("a2");
  auto t = tau(simple(*a2, 0));
  EXPECT_EQ(t.dims(), (std::vector<int>{0, 1}));
  auto loop = load_algebra("loop_x2");
  auto tl = tau(simple(*loop, 0));
  EXPECT_EQ(tl.dims(), std::vector<int>{1});
  for (const char* name : {"a3", "d4", "comm_square", "kronecker", "loop_x2"}) {
    auto alg = load_algebra(name);
    for (int i = 0; i < alg->num_vertices(); ++i) {
      EXPECT_TRUE(tau(projective(*alg, i)).is_zero());
      auto inj = injective(*alg, i);
      EXPECT_TRUE(nakayama(projective(*alg, i)).dims() == inj.dims());
    }
  }
}

TEST(AuslanderReiten, TransposeOfSimple) {
  auto a2 = load_algebra("a2");
  auto tr = transpose(simple(*a2, 0));
  EXPECT_TRUE(tr.algebra().is_opposite());
  EXPECT_EQ(tr.dims(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(transpose(projective(*a2, 0)).is_zero());
}

TEST(AuslanderReiten, KroneckerTranslate) {
  auto kr = load_algebra("kronecker");
  // S(1) is the simple injective; its translate is the preinjective of
  // dimension 2 [I(2)] - [I(1)] = (3,2)
  auto t = tau(simple(*kr, 0));
  EXPECT_EQ(t.dims(), (std::vector<int>{3, 2}));
  EXPECT_EQ(dimension_vector(t), (IntVector{3, 2}));
  // the simple projective S(2) has no translate; the next preprojective does
  EXPECT_TRUE(tau(simple(*kr, 1)).is_zero());
  EXPECT_EQ(d_vector(*kr), (IntVector{1, 1}));
}
