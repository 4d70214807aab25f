#include <gtest/gtest.h>

#include <limits>

#include "grgraph/errors.hpp"
#include "grgraph/graph.hpp"
#include "grgraph/graph_export.hpp"
#include "oracles.hpp"

using namespace grgraph;

namespace {

ExtendedInt oracle_girth(const Graph& g) {
  const std::size_t v = oracle::girth(g);
  return v == 0 ? ExtendedInt::infinite() : ExtendedInt::finite(v);
}

ExtendedInt oracle_diameter(const Graph& g) {
  const std::size_t v = oracle::diameter(g);
  return v == std::numeric_limits<std::size_t>::max() ? ExtendedInt::infinite() : ExtendedInt::finite(v);
}

}  // namespace

TEST(Graph, InvariantsAgreeWithOracles) {
  unsigned seed = 1;
  for (std::size_t n = 0; n <= 10; ++n)
    for (double p : {0.15, 0.35, 0.6, 0.9})
      for (int rep = 0; rep < 4; ++rep) {
        const Graph g = oracle::random_graph(n, p, seed++);
        SCOPED_TRACE("n=" + std::to_string(n) + " seed=" + std::to_string(seed - 1));
        EXPECT_EQ(clique_number(g), oracle::clique_number(g));
        EXPECT_EQ(domination_number(g), oracle::domination_number(g));
        EXPECT_EQ(girth(g), oracle_girth(g));
        EXPECT_EQ(diameter(g), oracle_diameter(g));
        EXPECT_TRUE(is_clique(g, maximum_clique(g)));
        EXPECT_EQ(maximum_clique(g).size(), clique_number(g));
        EXPECT_TRUE(is_dominating(g, minimum_dominating_set(g)));
        EXPECT_EQ(minimum_dominating_set(g).size(), domination_number(g));
      }
}

TEST(Graph, WeightedCliqueAgreesWithSubsetScan) {
  for (unsigned seed = 100; seed < 140; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Graph g = oracle::random_graph(n, 0.5, seed);
    std::vector<std::size_t> w(n);
    for (std::size_t v = 0; v < n; ++v) w[v] = (seed * 7 + v * 13) % 6;
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      bool clique = true;
      std::size_t sum = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (!(mask >> u & 1)) continue;
        sum += w[u];
        for (std::size_t v = u + 1; v < n; ++v)
          if ((mask >> v & 1) && !g.adjacent(u, v)) clique = false;
      }
      if (clique) best = std::max(best, sum);
    }
    const WeightedClique c = max_weight_clique(g, w);
    EXPECT_EQ(c.weight, best) << "seed " << seed;
    EXPECT_TRUE(is_clique(g, c.members));
  }
}

TEST(Graph, DegenerateConventions) {
  const Graph empty(0), one(1), two(2);
  EXPECT_TRUE(connectivity(empty).connected);
  EXPECT_TRUE(connectivity(one).connected);
  EXPECT_FALSE(connectivity(two).connected);
  EXPECT_EQ(diameter(one), ExtendedInt::finite(0));
  EXPECT_TRUE(diameter(two).is_infinite());
  EXPECT_TRUE(girth(one).is_infinite());
  EXPECT_EQ(clique_number(empty), 0u);
  EXPECT_EQ(clique_number(two), 1u);
  EXPECT_EQ(domination_number(empty), 0u);
  const ShapeFlags f = classify_shape(empty);
  EXPECT_TRUE(f.null);
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(ExtendedInt::infinite().to_string(), "inf");
}

TEST(Graph, ShapeFlags) {
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  ShapeFlags f = classify_shape(star);
  EXPECT_TRUE(f.star);
  EXPECT_EQ(f.star_center, std::optional<std::size_t>(0));
  EXPECT_FALSE(f.regular);
  f = classify_shape(oracle::complete(4));
  EXPECT_TRUE(f.complete);
  EXPECT_TRUE(f.regular);
  EXPECT_FALSE(f.star);
  f = classify_shape(oracle::complete(2));
  EXPECT_TRUE(f.star);
  EXPECT_EQ(oracle::complete(5).degree_sequence(), (std::vector<std::size_t>(5, 4)));
}

TEST(Graph, SizeCap) {
  const Graph g = oracle::random_graph(70, 0.1, 7);
  EXPECT_THROW(clique_number(g), Error);
  EXPECT_THROW(domination_number(g), Error);
  const GraphInvariants inv = compute_invariants(g);
  EXPECT_FALSE(inv.clique_number.has_value());
  // Over the exact cap: dense graphs still fall to the edge bound.
  EXPECT_EQ(inv.planar, Planarity::nonplanar);
  const Graph sparse = oracle::random_graph(70, 0.04, 7);
  ASSERT_LE(sparse.size(), 3 * 70 - 6);
  EXPECT_EQ(is_planar(sparse), Planarity::unknown);
}

TEST(Graph, IntersectionGraphMatchesDefinition) {
  for (const char* stem : {"z12", "z16", "z4xz4", "z8_id_z8", "f2_d3", "z8_c2"}) {
    const auto inst = oracle::corpus(stem);
    const auto family = nontrivial_proper(enumerate_left_ideals(inst.ring()));
    const auto g = build_intersection_graph(inst.ring(), family);
    std::vector<BitSet> members;
    for (const auto& I : family) members.push_back(I.members);
    EXPECT_EQ(g.graph.edges(), oracle::intersection_graph(members).edges()) << stem;
  }
}

TEST(Graph, Z12FixedPoint) {
  const auto inst = oracle::corpus("z12");
  const auto g = build_intersection_graph(inst.ring(), nontrivial_proper(enumerate_left_ideals(inst.ring())));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.graph.size(), 4u);
  EXPECT_EQ(diameter(g.graph), ExtendedInt::finite(2));
  EXPECT_EQ(girth(g.graph), ExtendedInt::finite(3));
  EXPECT_EQ(clique_number(g.graph), 3u);
  EXPECT_EQ(domination_number(g.graph), 1u);
}

TEST(Export, DotIsDeterministic) {
  const auto inst = oracle::corpus("z12");
  const auto g = build_intersection_graph(inst.ring(), nontrivial_proper(enumerate_left_ideals(inst.ring())));
  const std::string dot = export_dot(g);
  EXPECT_EQ(dot, export_dot(g));
  EXPECT_EQ(dot.rfind("graph G {\n", 0), 0u);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t at = 0; (at = dot.find("[label=", at)) != std::string::npos; ++at) ++nodes;
  for (std::size_t at = 0; (at = dot.find(" -- ", at)) != std::string::npos; ++at) ++edges;
  EXPECT_EQ(nodes, 4u);
  EXPECT_EQ(edges, 4u);
}

TEST(Export, JsonRoundTrip) {
  for (const char* stem : {"z12", "z8_id_z8", "f2_xy"}) {
    const auto inst = oracle::corpus(stem);
    const auto g = build_intersection_graph(inst.ring(), nontrivial_proper(enumerate_left_ideals(inst.ring())));
    const std::string text = export_json(g);
    const auto back = to_intersection_graph(read_graph_json(text));
    EXPECT_EQ(back.graph.edges(), g.graph.edges());
    EXPECT_EQ(back.labels, g.labels);
    EXPECT_EQ(export_json(back), text);
  }
  EXPECT_THROW(read_graph_json("{\"ring_size\": 2}"), Error);
  EXPECT_THROW(read_graph_json("not json"), Error);
}
