#include <gtest/gtest.h>

#include "evc/algorithms.hpp"
#include "evc/generators.hpp"
#include "evc/graph.hpp"
#include "oracles.hpp"

using namespace evc;

namespace {

Graph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::with_default_ids(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::with_default_ids(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::with_default_ids(leaves + 1, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::with_default_ids(a + b, e);
}

}  // namespace

TEST(Parse, SingleEdgeWithImplicitIds) {
  Graph g = parse_graph("graph 2\ne a b\n");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(g.at("a"), g.at("b")));
}

TEST(Parse, PathOnThree) {
  Graph g = parse_graph("graph 3\ne a b\ne b c");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(g.at("b")), 2u);
  EXPECT_FALSE(g.has_edge(g.at("a"), g.at("c")));
}

TEST(Parse, DefaultIdsPadTheDeclaredCount) {
  Graph g = parse_graph("graph 4\ne x y\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.find("v0").has_value());
  EXPECT_TRUE(g.find("v1").has_value());
  EXPECT_EQ(parse_graph("graph 3\n").ids(), (std::vector<std::string>{"v0", "v1", "v2"}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_graph("graph 1\ne a a\n"), GraphError);
  EXPECT_THROW(parse_graph("graph 2\nv a\nv b\ne a b\ne b a\n"), GraphError);
  EXPECT_THROW(parse_graph("graph 2\nv a\nv b\ne a c\n"), GraphError);
  EXPECT_THROW(parse_graph("e a b\n"), GraphError);
  EXPECT_THROW(parse_graph("graph x\n"), GraphError);
  EXPECT_THROW(parse_graph("graph 3\nv a\nv b\n"), GraphError);
  EXPECT_THROW(parse_graph("graph 1\ne a b\n"), GraphError);
  EXPECT_THROW(parse_graph("graph 2\nv a\nv b\nz a b\n"), GraphError);
}

TEST(Parse, CommentsAndBlankLines) {
  Graph g = parse_graph("# a triangle\n\ngraph 3  # header\nv p\nv q\nv r\ne p q\ne q r # closing\ne r p\n");
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Parse, SerializeRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(1 + rng.below(12), 0.4, rng);
    std::string text = serialize_graph(g);
    Graph back = parse_graph(text);
    EXPECT_EQ(serialize_graph(back), text);
    EXPECT_EQ(back.edges(), g.edges());
  }
}

TEST(Graph, IdsAreSortedAndAdjacencySymmetric) {
  Graph g({"c", "a", "b"}, {{"c", "a"}, {"b", "c"}});
  EXPECT_EQ(g.ids(), (std::vector<std::string>{"a", "b", "c"}));
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
  EXPECT_THROW(Graph({"a", "a"}, {}), GraphError);
}

TEST(VertexCover, Examples) {
  Graph p3 = parse_graph("graph 3\ne a b\ne b c");
  EXPECT_TRUE(is_vertex_cover(p3, p3.set_of({"b"})));
  EXPECT_FALSE(is_vertex_cover(p3, p3.set_of({"a"})));
  Graph c4 = cycle(4);
  EXPECT_TRUE(is_vertex_cover(c4, c4.set_of({"v0", "v2"})));
  EXPECT_FALSE(is_vertex_cover(c4, c4.set_of({"v0", "v1"})));
}

TEST(Mvc, Examples) {
  EXPECT_EQ(mvc_exact(complete_graph(4)).size, 3u);
  Graph p4 = path(4);
  EXPECT_EQ(mvc_exact(p4).size, oracle::cover_number(p4));
  EXPECT_EQ(mvc_exact(p4).size, 2u);
  EXPECT_EQ(mvc_exact(star(4)).size, 1u);
  EXPECT_THROW(mvc_exact(path(30)), LimitExceeded);
}

TEST(Mvc, BranchAndBoundAgreesWithBruteForce) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(1 + rng.below(14), rng.unit(), rng);
    auto a = mvc_exact(g);
    auto b = mvc_brute_force(g);
    EXPECT_EQ(a.size, b.size);
    EXPECT_EQ(a.size, oracle::cover_number(g));
    EXPECT_TRUE(is_vertex_cover(g, a.witness));
    EXPECT_EQ(a.witness.size(), a.size);
  }
}

TEST(Matching, Examples) {
  EXPECT_EQ(max_matching(path(2)).size(), 1u);
  EXPECT_EQ(max_matching(path(4)).size(), 2u);
  EXPECT_EQ(max_matching(cycle(5)).size(), 2u);
  EXPECT_EQ(oracle::matching_number(cycle(5)), 2u);
}

TEST(Matching, MaximumAgainstEnumeration) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(2 + rng.below(8), 0.4, rng);
    if (g.edge_count() > 18) continue;
    auto m = max_matching(g);
    EXPECT_EQ(m.size(), oracle::matching_number(g));
    VertexSet used = g.empty_set();
    for (auto [u, v] : m) {
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_FALSE(used.contains(u) || used.contains(v));
      used.insert(u);
      used.insert(v);
    }
  }
}

TEST(MvcBipartite, Examples) {
  EXPECT_EQ(mvc_bipartite(complete_bipartite(3, 3)).size, 3u);
  EXPECT_EQ(oracle::matching_number(complete_bipartite(3, 3)), 3u);
  EXPECT_EQ(mvc_bipartite(path(4)).size, mvc_exact(path(4)).size);
  EXPECT_EQ(mvc_bipartite(Graph::with_default_ids(5, {})).size, 0u);
  EXPECT_THROW(mvc_bipartite(cycle(5)), GraphError);
}

TEST(MvcBipartite, KonigAgreesWithExactOnRandomBipartite) {
  Rng rng(17);
  std::size_t bipartite_seen = 0;
  for (int i = 0; i < 2000 && bipartite_seen < 500; ++i) {
    Graph g = random_graph(1 + rng.below(10), 0.25, rng);
    if (!two_coloring(g)) continue;
    ++bipartite_seen;
    auto res = mvc_bipartite(g);
    EXPECT_EQ(res.size, mvc_exact(g).size);
    EXPECT_TRUE(is_vertex_cover(g, res.witness));
    EXPECT_EQ(res.witness.size(), res.size);
  }
  EXPECT_GE(bipartite_seen, 500u);
}

TEST(TwoMatchingCover, Examples) {
  EXPECT_EQ(two_matching_cover(path(2)).size(), 2u);
  EXPECT_EQ(two_matching_cover(path(4)).size(), 4u);
  EXPECT_EQ(two_matching_cover(star(4)).size(), 2u);
}

TEST(TwoMatchingCover, WithinFactorTwo) {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    Graph g = random_graph(1 + rng.below(10), rng.unit(), rng);
    auto c = two_matching_cover(g);
    auto mvc = mvc_exact(g).size;
    EXPECT_TRUE(is_vertex_cover(g, c));
    EXPECT_GE(c.size(), mvc);
    EXPECT_LE(c.size(), 2 * mvc);
    EXPECT_EQ(c.size(), 2 * max_matching(g).size());
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(complete_graph(4)), 1u);
  EXPECT_EQ(diameter(path(4)), 3u);
  EXPECT_EQ(diameter(Graph::with_default_ids(4, {{0, 1}, {2, 3}})), std::nullopt);
  EXPECT_EQ(diameter(Graph::with_default_ids(1, {})), 0u);
}

TEST(Classify, Examples) {
  auto c4 = classify(cycle(4));
  EXPECT_TRUE(c4.bipartite);
  EXPECT_TRUE(c4.cobipartite);
  auto k4 = classify(complete_graph(4));
  EXPECT_TRUE(k4.split);
  EXPECT_TRUE(k4.cobipartite);
  EXPECT_FALSE(k4.bipartite);
  auto c5 = classify(cycle(5));
  EXPECT_FALSE(c5.bipartite);
  EXPECT_FALSE(c5.split);
  EXPECT_FALSE(c5.cobipartite);
}

TEST(Classify, SplitAgainstBruteForcePartition) {
  Rng rng(29);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_graph(1 + rng.below(8), rng.unit(), rng);
    bool brute = false;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()) && !brute; ++m) {
      Config clique = oracle::to_config(g, m);
      Config rest = g.full_set() - clique;
      bool independent = true;
      for (auto e : g.edges())
        if (rest.contains(e.first) && rest.contains(e.second)) independent = false;
      brute = independent && is_clique(g, clique);
    }
    EXPECT_EQ(classify(g).split, brute) << serialize_graph(g);
  }
}

TEST(Classify, CobipartiteIffComplementBipartite) {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    Graph g = random_graph(1 + rng.below(9), rng.unit(), rng);
    EXPECT_EQ(classify(g).cobipartite, classify(g.complement()).bipartite);
  }
}
