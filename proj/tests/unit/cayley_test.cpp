#include <gtest/gtest.h>

#include "convdiff/boolean.hpp"
#include "convdiff/cayley.hpp"
#include "convdiff/error.hpp"
#include "oracles.hpp"

using namespace convdiff;

namespace {

CayleyGraph make(FiniteGroup g, std::vector<Element> gens) {
  auto set = GeneratingSet::validate(g, gens);
  return cayley_graph(std::move(g), std::move(set));
}

} // namespace

TEST(CayleyGraph, Z2) {
  const auto c = make(cyclic(2), {1});
  EXPECT_EQ(c.digraph().neighborhoods(),
            (std::vector<std::vector<Vertex>>{{0, 1}, {0, 1}}));
}

TEST(CayleyGraph, S3IdentityNeighborhood) {
  const auto c = make(symmetric(3), {1, 3});
  const auto nb = c.identity_nbhd();
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{0, 1, 3}));
}

TEST(CayleyGraph, Z6) {
  const auto c = make(cyclic(6), {1});
  for (Vertex k = 0; k < 6; ++k) {
    std::vector<Vertex> want{k, (k + 1) % 6};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(c.digraph().neighborhoods()[k], want);
  }
}

TEST(CayleyGraph, DirectSumIsBoxProduct) {
  const auto a = make(cyclic(3), {1});
  const auto b = make(symmetric(3), {1, 3});
  const auto sum = direct_sum(a, b);
  EXPECT_EQ(sum.digraph(), box_product(a.digraph(), b.digraph()));
  EXPECT_EQ(direct_sum(hypercube(1), hypercube(2)).digraph(), hypercube(3).digraph());
}

TEST(LeftMultiplication, HoldsForEveryStandardGraph) {
  for (const auto &[name, c] : oracle::standard_cayley_graphs())
    EXPECT_TRUE(left_mult_automorphism_check(c).holds) << name;
}

TEST(LeftMultiplication, CorruptedDigraphFails) {
  const auto c = make(symmetric(3), {1, 3});
  auto nb = c.digraph().neighborhoods();
  nb[2].erase(std::find(nb[2].begin(), nb[2].end(), Vertex{0}));
  const auto check = left_mult_automorphism_check(c.group(), ReflexiveDigraph(nb));
  EXPECT_FALSE(check.holds);
  EXPECT_TRUE(check.witness.has_value());
  EXPECT_FALSE(check.detail.empty());
}

TEST(DiffSpace, Z6IsDiscreteWithZeroAndIdentity) {
  const auto c = make(cyclic(6), {1});
  const auto d = diff_space(c, c, {}, true);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.index_of(FiniteMap::constant(6, 6, 0)));
  EXPECT_TRUE(d.index_of(FiniteMap::identity(6)));
  EXPECT_TRUE(is_isolated(d, 0));
  EXPECT_TRUE(is_isolated(d, 1));
}

TEST(DiffSpace, S3Endomorphisms) {
  const auto c = make(symmetric(3), {1, 3});
  const auto d = diff_space(c, c, {}, true);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.maps(), oracle::diff_space_by_exhaustion(c, c));
  // Zero and the sign-like map are neighbors; the identity is isolated.
  EXPECT_TRUE(d.adjacent(0, 1));
  EXPECT_TRUE(d.adjacent(1, 0));
  EXPECT_TRUE(is_isolated(d, 2));
  EXPECT_EQ(shared_involution(c, d.map(0), d.map(1)), std::optional<Element>{3});
  EXPECT_FALSE(shared_involution(c, d.map(0), d.map(2)));
}

TEST(DiffSpace, ZeroOnB1IsNotIsolated) {
  const auto b1 = hypercube(1);
  const auto d = diff_space(b1, b1);
  const auto zero = d.index_of(FiniteMap::constant(2, 2, 0));
  ASSERT_TRUE(zero);
  EXPECT_FALSE(is_isolated(d, *zero));
  EXPECT_TRUE(d.adjacent(*zero, *d.index_of(FiniteMap::identity(2))));
}

TEST(DiffSpace, OneMapSpaceIsIsolated) {
  const auto z3 = make(cyclic(3), {1});
  const auto d = diff_space(z3, make(cyclic(2), {1}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(is_isolated(d, 0));
}

TEST(DiffSpace, MembersAndNeighborhoodsMatchExhaustion) {
  const auto graphs = oracle::standard_cayley_graphs();
  for (const auto &[cn, c] : graphs)
    for (const auto &[dn, d] : graphs) {
      if (std::pow(double(d.group().order()), double(c.group().order())) > 1e6)
        continue;
      const auto space = diff_space(c, d, {}, true);
      ASSERT_EQ(space.maps(), oracle::diff_space_by_exhaustion(c, d)) << cn << "->" << dn;
      for (std::size_t l = 0; l < space.size(); ++l)
        for (std::size_t k = 0; k < space.size(); ++k) {
          const std::vector<Vertex> kv(space.map(k).values().begin(), space.map(k).values().end());
          const std::vector<Vertex> lv(space.map(l).values().begin(), space.map(l).values().end());
          EXPECT_EQ(space.adjacent(l, k),
                    oracle::exp_neighbor(c.digraph().neighborhoods(),
                                         d.digraph().neighborhoods(), kv, lv));
        }
    }
}

TEST(DiffSpace, FromMapsRejectsDiscontinuous) {
  const auto p = pentacle();
  try {
    DiffSpace::from_maps(p, p, {FiniteMap(5, {0, 3, 0, 0, 0})});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContinuous);
  }
}

TEST(IntegerSpaces, Members) {
  const auto line = integers_diff_space();
  EXPECT_EQ(line.size(), 2u);
  for (auto l : line) {
    EXPECT_TRUE(is_isolated(l));
    EXPECT_TRUE(is_continuous_on_window(l, 10));
  }
  EXPECT_EQ(apply(IntegerLineMap::Identity, -4), -4);
  EXPECT_EQ(compose(IntegerLineMap::Zero, IntegerLineMap::Identity), IntegerLineMap::Zero);

  const auto plane = integers_plane_diff_space();
  EXPECT_EQ(plane.size(), 4u);
  EXPECT_EQ(apply(IntegerPlaneMap::Sum, 2, 5), 7);
  EXPECT_EQ(apply(IntegerPlaneMap::Proj2, 2, 5), 5);
  for (auto l : plane)
    EXPECT_TRUE(is_continuous_on_window(l, 6)) << to_string(l);
}
