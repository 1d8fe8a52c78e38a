#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace htrans;
using namespace htrans::testing;

namespace {

Hypergraph single_edge(std::size_t k) {
  Hypergraph p(k, k);
  std::vector<Vertex> e(k);
  std::iota(e.begin(), e.end(), 0);
  p.add_edge(e);
  return p;
}

ReductionParams params(std::size_t B, std::size_t a, std::uint64_t seed, PatternGraph h) {
  ReductionParams r;
  r.B = B;
  r.a = a;
  r.seed = seed;
  r.pattern = std::move(h);
  return r;
}

// Every copy of the pattern avoiding F, checked with the brute-force matcher.
bool brute_no_copies(const Graph& g, const PatternGraph& h, const VertexSet& F) {
  auto rest = remove_vertices(g, F);
  return brute_copies(rest.graph, h).empty();
}

}  // namespace

TEST(RandomMatching, SizesForSingleTriangle) {
  auto out = build_random_matching_instance(single_edge(3), params(4, 2, 1, PatternGraph::cycle(3)));
  EXPECT_EQ(out.graph.size(), 12u);
  EXPECT_EQ(out.canonical.size(), 8u);
  EXPECT_LE(out.graph.edge_count(), 24u);
  for (const auto& c : out.canonical) {
    ASSERT_EQ(c.vertices.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(out.cloud_of(c.vertices[i]).first, i);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(out.graph.has_edge(c.vertices[i], c.vertices[(i + 1) % 3]));
  }
}

TEST(RandomMatching, BEqualsOneIsNaive) {
  Hypergraph p(5, 3);
  p.add_edge({0, 1, 2});
  p.add_edge({2, 3, 4});
  auto out = build_random_matching_instance(p, params(1, 3, 9, PatternGraph::cycle(3)));
  EXPECT_EQ(out.graph.size(), 5u);
  EXPECT_EQ(out.graph.edge_count(), 6u);
  for (const auto& c : out.canonical) EXPECT_EQ(normalized(c.vertices), normalized(p.edge(c.hyperedge)));
}

TEST(RandomMatching, DeterministicPerSeed) {
  auto p = random_hypergraph(6, 4, 3, 11);
  auto a = build_random_matching_instance(p, params(5, 2, 3, PatternGraph::cycle(3)));
  auto b = build_random_matching_instance(p, params(5, 2, 3, PatternGraph::cycle(3)));
  EXPECT_TRUE(a.graph == b.graph);
  EXPECT_EQ(to_text(a.graph), to_text(b.graph));
  auto c = build_random_matching_instance(p, params(5, 2, 4, PatternGraph::cycle(3)));
  EXPECT_FALSE(a.graph == c.graph);
}

TEST(RandomMatching, ValidatesParameters) {
  auto p = single_edge(3);
  EXPECT_THROW(build_random_matching_instance(p, params(0, 1, 0, PatternGraph::cycle(3))), std::invalid_argument);
  EXPECT_THROW(build_random_matching_instance(p, params(2, 0, 0, PatternGraph::cycle(3))), std::invalid_argument);
  auto star = params(2, 1, 0, PatternGraph::star(3));
  EXPECT_THROW(build_random_matching_instance(p, star), std::invalid_argument);
  star.allow_non_two_connected = true;
  auto out = build_random_matching_instance(p, star);
  EXPECT_FALSE(out.warnings.empty());
  auto directed = params(2, 1, 0, PatternGraph::clique(3));
  directed.directed = true;
  EXPECT_THROW(build_random_matching_instance(p, directed), std::invalid_argument);
}

TEST(Completeness, NaiveExactCover) {
  Hypergraph p(6, 3);
  p.add_edge({0, 1, 2});
  p.add_edge({3, 4, 5});
  auto out = build_random_matching_instance(p, params(1, 1, 0, PatternGraph::cycle(3)));
  auto r = completeness_transversal(out, {0, 3});
  EXPECT_EQ(r.F, (VertexSet{0, 3}));
  EXPECT_EQ(r.extras, 0u);
}

TEST(Completeness, SingleTriangleCoverOneVertex) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto out = build_random_matching_instance(single_edge(3), params(4, 2, seed, PatternGraph::cycle(3)));
    auto r = completeness_transversal(out, {1});
    EXPECT_EQ(r.base_size, 4u);
    EXPECT_EQ(r.F.size(), 4 + r.extras);
    // Removing cloud(1) leaves a bipartite remainder, so no triangle survives.
    EXPECT_EQ(r.extras, 0u);
    EXPECT_TRUE(brute_no_copies(out.graph, PatternGraph::cycle(3), r.F));
  }
}

TEST(Completeness, EmptyHypergraph) {
  Hypergraph p(4, 3);
  auto out = build_random_matching_instance(p, params(3, 2, 0, PatternGraph::cycle(3)));
  EXPECT_TRUE(completeness_transversal(out, {}).F.empty());
  EXPECT_THROW(completeness_transversal(build_random_matching_instance(single_edge(3), out.params), {}),
               std::invalid_argument);
}

TEST(Completeness, RandomTriplesLeaveNoCopy) {
  const std::vector<PatternGraph> patterns = {PatternGraph::cycle(3), PatternGraph::clique(3), PatternGraph::cycle(4)};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto& h = patterns[seed % 3];
    auto p = random_hypergraph(5, 3, h.k(), seed);
    auto cover = min_hypergraph_vertex_cover(p).vertices;
    auto out = build_random_matching_instance(p, params(3, 2, seed, h));
    auto r = completeness_transversal(out, cover);
    EXPECT_TRUE(brute_no_copies(out.graph, h, r.F)) << seed;
    EXPECT_EQ(r.base_size, cover.size() * 3);
  }
}

TEST(Noncanonical, OverlappingNaiveTriangles) {
  Hypergraph p(4, 3);
  p.add_edge({0, 1, 2});
  p.add_edge({1, 2, 3});
  auto out = build_random_matching_instance(p, params(1, 1, 0, PatternGraph::cycle(3)));
  auto rep = count_noncanonical(out);
  EXPECT_EQ(rep.total_copies, 2u);
  EXPECT_EQ(rep.count, 0u);
  Hypergraph q(4, 3);
  q.add_edge({0, 1, 2});
  q.add_edge({0, 2, 3});
  q.add_edge({0, 1, 3});
  auto out2 = build_random_matching_instance(q, params(1, 1, 0, PatternGraph::cycle(3)));
  auto rep2 = count_noncanonical(out2);
  EXPECT_EQ(rep2.count, 1u);  // {1,2,3} arises from three hyperedges
  EXPECT_EQ(rep2.samples.front(), (VertexSet{1, 2, 3}));
}

TEST(Noncanonical, SingleEdgeCliqueMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto out = build_random_matching_instance(single_edge(3), params(4, 2, seed, PatternGraph::clique(3)));
    auto canon = out.canonical_sets();
    std::size_t expected = 0;
    for (const auto& c : brute_copies(out.graph, PatternGraph::clique(3))) expected += !canon.count(c);
    EXPECT_EQ(count_noncanonical(out).count, expected);
  }
  Hypergraph empty(5, 3);
  EXPECT_EQ(count_noncanonical(build_random_matching_instance(empty, params(4, 1, 0, PatternGraph::cycle(3)))).count,
            0u);
}

TEST(Soundness, ExtremeMeasures) {
  auto out = build_random_matching_instance(single_edge(3), params(6, 2, 5, PatternGraph::cycle(3)));
  auto full = soundness_probe(out, 1.0, 20, 1);
  EXPECT_EQ(full.hits, 20u);
  auto tiny = soundness_probe(out, 2.0 / 18.0, 20, 1);
  EXPECT_EQ(tiny.subset_size, 2u);
  EXPECT_EQ(tiny.hits, 0u);
  EXPECT_THROW(soundness_probe(out, 0.0, 1, 1), std::invalid_argument);
}

TEST(Soundness, DenseSubsetsContainCanonicalCopy) {
  auto out = build_random_matching_instance(single_edge(3), params(16, 4, 1, PatternGraph::cycle(3)));
  auto rep = soundness_probe(out, 0.9, 100, 1);
  EXPECT_GE(rep.rate(), 0.95);
  auto again = soundness_probe(out, 0.9, 100, 1);
  EXPECT_EQ(rep.witness_edge, again.witness_edge);
}

TEST(ShortCycles, NaiveTriangleHasOnlyCanonical) {
  auto out = build_random_matching_instance(single_edge(3), params(1, 1, 0, PatternGraph::cycle(3)));
  auto rep = count_short_cycles(out, 3);
  EXPECT_EQ(rep.noncanonical.at(3), 0u);
  EXPECT_EQ(rep.total.at(3), 1u);
  EXPECT_THROW(count_short_cycles(out, 2), std::invalid_argument);
}

TEST(ShortCycles, CountsMatchBruteEnumeration) {
  Hypergraph p(5, 3);
  p.add_edge({0, 1, 2});
  p.add_edge({2, 3, 4});
  auto out = build_random_matching_instance(p, params(8, 2, 3, PatternGraph::cycle(3)));
  auto rep = count_short_cycles(out, 6);
  auto canon = out.canonical_sets();
  std::size_t tri = 0, tri_non = 0;
  const std::size_t n = out.graph.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (out.graph.has_edge(a, b) && out.graph.has_edge(b, c) && out.graph.has_edge(a, c)) {
          ++tri;
          tri_non += !canon.count(VertexSet{a, b, c});
        }
  EXPECT_EQ(rep.total.at(3), tri);
  EXPECT_EQ(rep.noncanonical.at(3), tri_non);
  std::size_t sum = 0;
  for (auto [len, c] : rep.noncanonical) sum += c;
  EXPECT_EQ(sum, rep.cycles.size());
}

TEST(ShortCycles, CompletenessHitsAllShortCycles) {
  Hypergraph p(5, 3);
  p.add_edge({0, 1, 2});
  p.add_edge({2, 3, 4});
  auto prm = params(4, 2, 6, PatternGraph::cycle(3));
  prm.kprime = 5;
  auto out = build_random_matching_instance(p, prm);
  auto r = completeness_short_cycles(out, {2}, 5);
  auto rest = remove_vertices(out.graph, r.F);
  EXPECT_TRUE(simple_cycles(rest.graph, 3, 5).empty());
  EXPECT_EQ(r.base_size, 4u);
}

TEST(ShortCycles, DirectedVariantCountsTwoCycles) {
  auto prm = params(3, 2, 2, PatternGraph::cycle(3));
  prm.directed = true;
  auto out = build_random_matching_instance(single_edge(3), prm);
  EXPECT_TRUE(out.graph.directed());
  auto rep = count_short_cycles(out, 3);
  EXPECT_TRUE(rep.total.count(2));
  EXPECT_EQ(rep.noncanonical.at(2), 0u);  // arcs only run from cloud i to cloud i+1
}
