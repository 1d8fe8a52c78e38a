#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace htrans;
using namespace htrans::testing;

namespace {

void expect_disjoint_copies(const Graph& g, const PatternGraph& h, const std::vector<VertexSet>& sets) {
  std::vector<bool> used(g.size(), false);
  for (const auto& s : sets) {
    EXPECT_TRUE(contains_copy(g, h, s));
    for (Vertex v : s) {
      EXPECT_FALSE(used[v]);
      used[v] = true;
    }
  }
}

}  // namespace

TEST(MinTransversal, Examples) {
  EXPECT_EQ(min_h_transversal(complete_graph(4), PatternGraph::cycle(3)).optimum, 2u);
  EXPECT_EQ(min_h_transversal(cycle_graph(5), PatternGraph::cycle(5)).optimum, 1u);
  auto none = min_h_transversal(cycle_graph(5), PatternGraph::cycle(3));
  EXPECT_EQ(none.optimum, 0u);
  EXPECT_TRUE(none.vertices.empty());
}

TEST(MaxPacking, Examples) {
  EXPECT_EQ(max_h_packing(disjoint_triangles(2), PatternGraph::cycle(3)).optimum, 2u);
  EXPECT_EQ(max_h_packing(complete_graph(4), PatternGraph::cycle(3)).optimum, 1u);
  auto k6 = max_h_packing(complete_graph(6), PatternGraph::cycle(3));
  EXPECT_EQ(k6.optimum, 2u);
  expect_disjoint_copies(complete_graph(6), PatternGraph::cycle(3), k6.sets);
}

TEST(MaxIndependentSet, Examples) {
  EXPECT_EQ(max_independent_set(cycle_graph(5)).optimum, 2u);
  EXPECT_EQ(max_independent_set(complete_graph(7)).optimum, 1u);
  EXPECT_EQ(max_independent_set(Graph(9)).optimum, 9u);
  EXPECT_EQ(max_independent_set(Graph(0)).optimum, 0u);
  EXPECT_THROW(max_independent_set(Graph(65)), CapacityError);
}

TEST(MaxIndependentSet, MatchesSubsetScan) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(6 + seed % 10, 0.3, seed);
    auto r = max_independent_set(g);
    EXPECT_EQ(r.optimum, brute_mis(g)) << "seed " << seed;
    EXPECT_EQ(r.vertices.size(), r.optimum);
    for (Vertex u : r.vertices)
      for (Vertex v : r.vertices) EXPECT_FALSE(g.has_edge(u, v));
  }
}

TEST(MaxIndependentSet, LargerSparseGraph) {
  Graph g = random_graph(40, 0.1, 3);
  auto r = max_independent_set(g);
  for (Vertex u : r.vertices)
    for (Vertex v : g.neighbors(u)) EXPECT_FALSE(contains(r.vertices, v));
  // Turan: |E| >= (n/2)(1/alpha - 1) with alpha = r.optimum / n.
  const double n = 40, alpha = static_cast<double>(r.optimum) / n;
  EXPECT_GE(static_cast<double>(g.edge_count()) + 1e-9, n / 2 * (1 / alpha - 1));
}

TEST(HypergraphVertexCover, Examples) {
  Hypergraph one(4, 3);
  one.add_edge({0, 1, 2});
  EXPECT_EQ(min_hypergraph_vertex_cover(one).optimum, 1u);

  Hypergraph disjoint(9, 3);
  disjoint.add_edge({0, 1, 2});
  disjoint.add_edge({3, 4, 5});
  disjoint.add_edge({6, 7, 8});
  EXPECT_EQ(min_hypergraph_vertex_cover(disjoint).optimum, 3u);

  Hypergraph p(5, 3);
  p.add_edge({0, 1, 2});
  p.add_edge({0, 3, 4});
  p.add_edge({1, 3, 2});
  p.add_edge({2, 3, 0});
  std::vector<VertexSet> sets;
  for (const auto& e : p.edges()) sets.push_back(normalized(e));
  auto r = min_hypergraph_vertex_cover(p);
  EXPECT_EQ(r.optimum, brute_min_hitting(5, sets));
  EXPECT_EQ(r.optimum, 2u);
  EXPECT_TRUE(p.is_vertex_cover(r.vertices));
}

TEST(HittingSet, MatchesSubsetScanOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Stream rng(seed, {9});
    const std::size_t n = 8 + seed % 6;
    std::vector<VertexSet> sets;
    for (std::size_t i = 0; i < 4 + seed % 12; ++i) sets.push_back(rng.subset(n, 1 + rng.below(4)));
    auto hit = min_hitting_set(n, sets);
    EXPECT_EQ(hit.optimum, brute_min_hitting(n, sets)) << "seed " << seed;
    for (const auto& s : sets) EXPECT_TRUE(intersects(s, hit.vertices));
    auto pack = max_disjoint_sets(n, sets);
    EXPECT_EQ(pack.optimum, brute_max_disjoint(sets)) << "seed " << seed;
  }
}

TEST(Oracles, NodeBudgetRaisesCapacityError) {
  Graph g = complete_graph(9);
  EXPECT_THROW(min_h_transversal(g, PatternGraph::cycle(3), OracleOptions{3}), CapacityError);
}

TEST(Oracles, DualityAndWitnessValidity) {
  const std::vector<PatternGraph> patterns = {PatternGraph::cycle(3), PatternGraph::cycle(4), PatternGraph::star(3),
                                              PatternGraph::clique(4), PatternGraph::path(3)};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(9, 0.4, seed);
    for (const auto& h : patterns) {
      auto t = min_h_transversal(g, h);
      auto p = max_h_packing(g, h);
      EXPECT_LE(p.optimum, t.optimum);
      EXPECT_TRUE(removal_kills_copies(g, h, t.vertices));
      EXPECT_EQ(t.vertices.size(), t.optimum);
      EXPECT_EQ(p.sets.size(), p.optimum);
      expect_disjoint_copies(g, h, p.sets);
      auto copies = enumerate_copies(g, h).copies;
      EXPECT_EQ(t.optimum, brute_min_hitting(g.size(), copies));
    }
  }
}

TEST(GreedyBaseline, Examples) {
  auto c5 = greedy_disjoint_baseline(cycle_graph(5), PatternGraph::cycle(5));
  EXPECT_EQ(c5.packing.size(), 1u);
  EXPECT_EQ(c5.transversal.size(), 5u);
  auto none = greedy_disjoint_baseline(cycle_graph(5), PatternGraph::cycle(3));
  EXPECT_TRUE(none.packing.empty());
  EXPECT_TRUE(none.transversal.empty());
  auto two = greedy_disjoint_baseline(disjoint_triangles(2), PatternGraph::cycle(3));
  EXPECT_EQ(two.packing.size(), 2u);
  EXPECT_EQ(two.transversal.size(), 6u);
}

TEST(GreedyBaseline, SandwichBounds) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(10, 0.35, seed);
    for (const auto& h : {PatternGraph::cycle(3), PatternGraph::cycle(4), PatternGraph::star(4)}) {
      auto greedy = greedy_disjoint_baseline(g, h);
      auto t = min_h_transversal(g, h).optimum;
      auto p = max_h_packing(g, h).optimum;
      const std::size_t k = h.k();
      EXPECT_LE(greedy.packing.size(), p);
      EXPECT_LE(p, k * greedy.packing.size());
      EXPECT_LE(t, greedy.transversal.size());
      EXPECT_LE(greedy.transversal.size(), k * t);
      EXPECT_TRUE(removal_kills_copies(g, h, greedy.transversal));
    }
  }
}
