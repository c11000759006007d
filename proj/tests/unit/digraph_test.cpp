#include <gtest/gtest.h>

#include "convdiff/error.hpp"
#include "convdiff/digraph.hpp"
#include "oracles.hpp"

using namespace convdiff;

namespace {

ReflexiveDigraph path(std::size_t n) {
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex v = 0; v < n; ++v) {
    nb[v].push_back(v);
    if (v + 1 < n)
      nb[v].push_back(v + 1);
  }
  return ReflexiveDigraph(nb);
}

} // namespace

TEST(Digraph, RejectsNonReflexive) {
  try {
    ReflexiveDigraph({{1}, {1}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReflexive);
  }
  EXPECT_THROW(ReflexiveDigraph({{0, 5}}), Error);
}

TEST(Digraph, SortsAndDeduplicates) {
  const ReflexiveDigraph g({{1, 0, 1}, {1}});
  EXPECT_EQ(g.neighborhoods()[0], (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(1, 0));
}

TEST(Filter, EmptyRejected) {
  try {
    PrincipalFilter({});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyFilter);
  }
}

TEST(Converges, Examples) {
  const auto p = pentacle();
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_TRUE(converges(discrete_space(5), PrincipalFilter::point(v), v));
  EXPECT_TRUE(converges(p, PrincipalFilter({0, 1}), 0));
  EXPECT_TRUE(converges(p, PrincipalFilter({0, 1, 2, 4}), 0));
  EXPECT_FALSE(converges(p, PrincipalFilter({3}), 0));
  EXPECT_FALSE(converges(discrete_space(2), PrincipalFilter::point(1), 0));
}

TEST(Pentacle, Neighborhoods) {
  const auto p = pentacle();
  EXPECT_EQ(p.neighborhoods()[2], (std::vector<Vertex>{1, 2, 3, 4}));
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_FALSE(p.adjacent(v, (v + 3) % 5));
}

TEST(Continuity, IdentityAndConstants) {
  const auto p = pentacle();
  EXPECT_TRUE(is_continuous(p, p, FiniteMap::identity(5)));
  EXPECT_TRUE(is_continuous(p, p, FiniteMap::constant(5, 5, 3)));
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_TRUE(is_continuous_at(p, p, FiniteMap::identity(5), v));
}

TEST(Continuity, PentacleEndomorphismCountMatchesExhaustion) {
  const auto p = pentacle();
  std::size_t brute = 0;
  oracle::for_each_map(5, 5, [&](const std::vector<Vertex> &f) {
    brute += oracle::graph_hom(p.neighborhoods(), p.neighborhoods(), f);
  });
  const auto maps = continuous_maps(p, p);
  EXPECT_EQ(maps.size(), brute);
  EXPECT_EQ(maps.size(), 185u);
  EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
}

TEST(Continuity, SmallCarriers) {
  EXPECT_EQ(continuous_maps(discrete_space(1), pentacle()).size(), 5u);
  EXPECT_EQ(continuous_maps(discrete_space(2), discrete_space(2)).size(), 4u);
}

TEST(HomNeighbor, ReflexiveForContinuous) {
  const auto p = pentacle();
  for (const auto &f : continuous_maps(p, p))
    EXPECT_TRUE(hom_neighbor(p, p, f, f));
}

TEST(HomNeighbor, ConstantsFollowCodomainAdjacency) {
  const auto p = pentacle();
  for (Vertex y = 0; y < 5; ++y)
    for (Vertex z = 0; z < 5; ++z)
      EXPECT_EQ(hom_neighbor(p, p, FiniteMap::constant(5, 5, y), FiniteMap::constant(5, 5, z)),
                p.adjacent(z, y));
}

TEST(HomNeighbor, PathWindowAgainstDefinition) {
  const auto x = path(5);
  const auto maps = continuous_maps(x, x);
  for (const auto &f : maps)
    for (const auto &g : maps) {
      const std::vector<Vertex> fv(f.values().begin(), f.values().end()),
          gv(g.values().begin(), g.values().end());
      EXPECT_EQ(hom_neighbor(x, x, f, g),
                oracle::exp_neighbor(x.neighborhoods(), x.neighborhoods(), fv, gv));
    }
}

TEST(HomNeighbor, RejectsDiscontinuous) {
  const auto x = path(3);
  const FiniteMap jump(3, {0, 2, 1});
  EXPECT_THROW(hom_neighbor(x, x, jump, FiniteMap::identity(3)), Error);
}

TEST(Products, TrivialCases) {
  EXPECT_EQ(box_product(discrete_space(1), discrete_space(1)).size(), 1u);
  const auto cat = categorical_product(discrete_space(2), discrete_space(3));
  EXPECT_TRUE(space_properties(cat).is_discrete);
}

TEST(Products, BoxOfPathsIsLShapedGrid) {
  const auto x = path(3);
  const auto box = box_product(x, x);
  ASSERT_EQ(box.size(), 9u);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b) {
      std::vector<Vertex> want{pair_index(a, b, 3)};
      if (a + 1 < 3)
        want.push_back(pair_index(a + 1, b, 3));
      if (b + 1 < 3)
        want.push_back(pair_index(a, b + 1, 3));
      std::sort(want.begin(), want.end());
      EXPECT_EQ(box.neighborhoods()[pair_index(a, b, 3)], want);
    }
  const auto cat = categorical_product(x, x);
  EXPECT_EQ(cat.nbhd(0).size(), 4u);
}

TEST(Products, Guard) {
  Limits tight;
  tight.max_product_size = 8;
  EXPECT_THROW(box_product(path(3), path(3), tight), Error);
}

TEST(Properties, DiscreteAndPentacle) {
  const auto d = space_properties(discrete_space(4));
  EXPECT_TRUE(d.is_T0 && d.is_T1 && d.is_discrete && d.is_topological);
  const auto p = space_properties(pentacle());
  EXPECT_TRUE(p.is_T0);
  EXPECT_FALSE(p.is_T1);
  EXPECT_FALSE(p.is_discrete);
  EXPECT_FALSE(p.is_topological);
}

TEST(Properties, CayleyGraphsAreNonTopologicalT0) {
  for (const auto &[name, c] : oracle::standard_cayley_graphs()) {
    const auto props = space_properties(c.digraph());
    if (name == "Z2" || name == "B1") {
      EXPECT_FALSE(props.is_T0) << name;
      EXPECT_TRUE(props.is_topological) << name;
    } else {
      EXPECT_TRUE(props.is_T0) << name;
      EXPECT_FALSE(props.is_topological) << name;
    }
  }
}
