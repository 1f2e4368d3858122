#include <gtest/gtest.h>

#include "tautilt/algebra.hpp"
#include "tautilt/representation.hpp"

using namespace tautilt;

namespace {

const char* kA2 = R"({"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],"relations":[]})";
const char* kLoop = R"({"vertices":["1"],"arrows":[{"name":"x","from":"1","to":"1"}],
  "relations":[{"terms":[{"coef":"1","path":["x","x"]}]}]})";
const char* kSquare = R"({"vertices":["1","2","3","4"],
  "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"4"},
            {"name":"c","from":"1","to":"3"},{"name":"d","from":"3","to":"4"}],
  "relations":[{"terms":[{"coef":"1","path":["a","b"]},{"coef":"-1","path":["c","d"]}]}]})";

}  // namespace

TEST(Algebra, PathAlgebraOfA2) {
  auto alg = parse_algebra(kA2);
  EXPECT_EQ(alg->dim(), 3u);
  EXPECT_EQ(alg->paths(0, 1).size(), 1u);
  EXPECT_EQ(alg->paths(1, 0).size(), 0u);
  auto p1 = projective(*alg, 0);
  EXPECT_EQ(p1.dims(), (std::vector<int>{1, 1}));
  auto i1 = injective(*alg, 0);
  EXPECT_EQ(i1.dims(), (std::vector<int>{1, 0}));
  auto i2 = injective(*alg, 1);
  EXPECT_EQ(i2.dims(), (std::vector<int>{1, 1}));
  EXPECT_FALSE(i2.action(0).is_zero());
}

TEST(Algebra, TruncatedLoop) {
  auto alg = parse_algebra(kLoop);
  EXPECT_EQ(alg->dim(), 2u);
  auto p = projective(*alg, 0);
  EXPECT_EQ(p.dims(), std::vector<int>{2});
  EXPECT_TRUE(p.satisfies_relations());
  Matrix x2 = p.action(0) * p.action(0);
  EXPECT_TRUE(x2.is_zero());
  EXPECT_FALSE(p.action(0).is_zero());
}

TEST(Algebra, CommutativeSquare) {
  auto alg = parse_algebra(kSquare);
  EXPECT_EQ(alg->dim(), 4u + 4u + 1u);  // idempotents, arrows, one path 1 -> 4
  EXPECT_EQ(alg->paths(0, 3).size(), 1u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(projective(*alg, i).satisfies_relations());
    EXPECT_TRUE(injective(*alg, i).satisfies_relations());
  }
  const auto& op = alg->opposite();
  EXPECT_EQ(op.paths(3, 0).size(), 1u);
  EXPECT_EQ(&op.opposite(), alg.get());
}

TEST(Algebra, RejectsNonAdmissible) {
  const char* free_loop = R"({"vertices":["1"],"arrows":[{"name":"x","from":"1","to":"1"}],"relations":[]})";
  EXPECT_THROW(parse_algebra(free_loop), NotAdmissible);
}

TEST(Algebra, RejectsBadInput) {
  EXPECT_THROW(parse_algebra(R"({"vertices":["1"],"extra":1})"), ParseError);
  EXPECT_THROW(parse_algebra(R"({"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"9"}]})"), ParseError);
  EXPECT_THROW(parse_algebra("{"), ParseError);
  const char* not_composable = R"({"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
    "relations":[{"terms":[{"coef":"1","path":["a","a"]}]}]})";
  EXPECT_THROW(parse_algebra(not_composable), InvalidRelation);
}
