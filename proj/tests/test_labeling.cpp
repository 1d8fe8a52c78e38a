#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace htrans;
using namespace htrans::testing;

namespace {

// Independent rule check: color-i arc raises coordinate i by one and lowers
// coordinate i+1 (cyclically) by one, nothing else changes.
std::size_t rule_color(std::size_t k, std::size_t B, Vertex u, Vertex v) {
  std::vector<long> du(k), dv(k);
  for (std::size_t j = 0; j < k; ++j) {
    du[j] = static_cast<long>(u % B);
    dv[j] = static_cast<long>(v % B);
    u /= B;
    v /= B;
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      long want = du[j] + (j == i ? 1 : 0) - (j == (i + 1) % k ? 1 : 0);
      ok = ok && dv[j] == want;
    }
    if (ok) return i + 1;
  }
  return 0;
}

Hypergraph single_edge3() {
  Hypergraph p(3, 3);
  p.add_edge({0, 1, 2});
  return p;
}

}  // namespace

TEST(Gadget, ThreeByTwoShape) {
  auto l = build_labeling_gadget(3, 2);
  EXPECT_EQ(l.size(), 8u);
  EXPECT_EQ(l.graph.edge_count(), 6u);
  std::vector<std::size_t> per_color(4, 0);
  for (const auto& [u, v] : l.graph.edges()) {
    EXPECT_EQ(l.color(u, v), rule_color(3, 2, u, v));
    ++per_color[l.color(u, v)];
  }
  EXPECT_EQ(per_color, (std::vector<std::size_t>{0, 2, 2, 2}));
  std::size_t rule_arcs = 0;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = 0; v < 8; ++v) rule_arcs += rule_color(3, 2, u, v) != 0;
  EXPECT_EQ(rule_arcs, 6u);
}

TEST(Gadget, ThreeByTwoWitnessCycle) {
  auto l = build_labeling_gadget(3, 2);
  Vertex a = l.id({2, 1, 1}), b = l.id({1, 1, 2}), c = l.id({1, 2, 1});
  EXPECT_EQ(l.coords(a), (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(l.color(a, b), 3u);
  EXPECT_EQ(l.color(b, c), 2u);
  EXPECT_EQ(l.color(c, a), 1u);
  EXPECT_EQ(girth(l.graph), 3u);
  EXPECT_EQ(brute_girth(l.graph), 3u);
}

TEST(Gadget, PropertiesHoldExhaustively) {
  auto r3 = verify_gadget_properties(build_labeling_gadget(3, 2));
  EXPECT_TRUE(r3.pass());
  EXPECT_EQ(r3.girth, 3u);
  auto r4 = verify_gadget_properties(build_labeling_gadget(4, 2));
  EXPECT_TRUE(r4.pass());
  EXPECT_EQ(r4.girth, 4u);
  EXPECT_GT(r4.cycles_checked, 0u);
  EXPECT_THROW(verify_gadget_properties(build_labeling_gadget(3, 5)), CapacityError);
}

TEST(Gadget, DeletedEdgeNegativeControl) {
  auto l = build_labeling_gadget(3, 2);
  Graph::Edge first{};
  for (const auto& e : l.graph.edges())
    if (l.color(e.first, e.second) == 1) {
      first = e;
      break;
    }
  auto cut = without_edge(l, first.first, first.second);
  EXPECT_EQ(cut.graph.edge_count(), 5u);
  auto rep = verify_gadget_properties(cut);
  EXPECT_TRUE(rep.colorful_ok);
  // Only one 3-cycle exists in the (3,2) gadget, so the cut one leaves it acyclic.
  EXPECT_EQ(rep.girth, girth(cut.graph));
  EXPECT_EQ(rep.girth_ok, rep.girth == 3);
}

TEST(ColorfulCycle, FullAndSingleton) {
  for (auto [k, B] : {std::pair{3u, 2u}, {3u, 4u}, {4u, 3u}}) {
    auto l = build_labeling_gadget(k, B);
    VertexSet all(l.size());
    std::iota(all.begin(), all.end(), 0);
    auto c = find_colorful_cycle(l, all);
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(is_ordered_colorful(l, *c));
    EXPECT_FALSE(find_colorful_cycle(l, {0}).has_value());
    EXPECT_FALSE(find_colorful_cycle(l, {l.size() - 1}).has_value());
  }
}

TEST(ColorfulCycle, HalfMeasureAlwaysSucceeds) {
  auto l = build_labeling_gadget(3, 7);
  for (std::uint64_t t = 0; t < 100; ++t) {
    Stream rng(42, {t});
    auto s = rng.subset(l.size(), l.size() / 2);
    auto c = find_colorful_cycle(l, normalized(VertexSet(s.begin(), s.end())));
    ASSERT_TRUE(c.has_value()) << t;
    EXPECT_TRUE(is_ordered_colorful(l, *c));
    for (Vertex v : *c) EXPECT_TRUE(contains(normalized(VertexSet(s.begin(), s.end())), v));
  }
}

TEST(ColorfulCycle, EnumerationAgreesWithConstruction) {
  auto l = build_labeling_gadget(3, 3);
  auto cycles = colorful_cycles(l);
  EXPECT_FALSE(cycles.empty());
  for (const auto& c : cycles) EXPECT_TRUE(is_ordered_colorful(l, c));
  for (std::uint64_t t = 0; t < 50; ++t) {
    Stream rng(3, {t});
    auto raw = rng.subset(l.size(), 4 + rng.below(20));
    VertexSet s = normalized(VertexSet(raw.begin(), raw.end()));
    bool exists = std::any_of(cycles.begin(), cycles.end(), [&](const Cycle& c) {
      return std::all_of(c.begin(), c.end(), [&](Vertex v) { return contains(s, v); });
    });
    auto found = find_colorful_cycle(l, s);
    if (found) {
      EXPECT_TRUE(exists);
    }
    EXPECT_TRUE(s.size() <= 3 * 9 || found.has_value());
  }
}

TEST(OuterColoring, Examples) {
  Hypergraph disjoint(6, 3);
  disjoint.add_edge({0, 1, 2});
  disjoint.add_edge({3, 4, 5});
  auto a = outer_coloring(disjoint, 5);
  EXPECT_EQ(a.colors, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(a.used, 1u);

  Hypergraph meet(5, 3);
  meet.add_edge({0, 1, 2});
  meet.add_edge({2, 3, 4});
  auto b = outer_coloring(meet, 1);
  EXPECT_EQ(b.colors, (std::vector<std::size_t>{1, 2}));

  Hypergraph path(9, 3);
  path.add_edge({0, 1, 2});
  path.add_edge({2, 3, 4});
  path.add_edge({4, 5, 6});
  path.add_edge({6, 7, 8});
  auto c = outer_coloring(path, 2);
  EXPECT_EQ(c.colors, (std::vector<std::size_t>{1, 2, 3, 1}));
  EXPECT_EQ(c.used, 3u);
  EXPECT_LE(static_cast<long double>(c.used), c.bound);
}

TEST(OuterColoring, DistinctWithinRadius) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto p = random_hypergraph(10, 6, 3, seed);
    const std::size_t kp = 1 + seed % 3;
    auto oc = outer_coloring(p, kp);
    const std::size_t m = p.edge_count();
    // Floyd-Warshall over the intersection graph.
    std::vector<std::vector<std::size_t>> d(m, std::vector<std::size_t>(m, 1000));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i == j) d[i][j] = 0;
        else if (intersects(normalized(p.edge(i)), normalized(p.edge(j)))) d[i][j] = 1;
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][w] + d[w][j]);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        EXPECT_TRUE(d[i][j] > kp || oc.colors[i] != oc.colors[j]);
  }
}

TEST(LabelingInstance, SingleHyperedge) {
  auto inst = build_labeling_instance(single_edge3(), 3, 3, 2);
  EXPECT_EQ(inst.graph.size(), 24u);
  EXPECT_EQ(inst.D, 1u);
  EXPECT_GE(girth(inst.graph), 3u);
  for (const auto& [u, v] : inst.graph.edges()) EXPECT_FALSE(inst.graph.has_edge(v, u));
  std::size_t canon = 0;
  for_each_canonical_cycle(inst, [&](std::size_t h, const Cycle&, std::size_t, const Cycle& c) {
    EXPECT_EQ(h, 0u);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_TRUE(inst.graph.has_edge(c[i], c[(i + 1) % c.size()]));
      EXPECT_EQ(inst.base_of(c[i]), i);
    }
    ++canon;
    return true;
  });
  EXPECT_EQ(canon, colorful_cycles(inst.gadget).size());
}

TEST(LabelingInstance, DisjointAndEmpty) {
  Hypergraph two(6, 3);
  two.add_edge({0, 1, 2});
  two.add_edge({3, 4, 5});
  auto inst = build_labeling_instance(two, 3, 3, 2);
  EXPECT_EQ(inst.outer.used, 1u);
  EXPECT_EQ(inst.graph.size(), 48u);

  Hypergraph none(4, 3);
  auto e = build_labeling_instance(none, 3, 3, 2);
  EXPECT_EQ(e.D, 1u);
  EXPECT_EQ(e.graph.edge_count(), 0u);
  EXPECT_EQ(e.graph.size(), 4u * 8u);
}

TEST(LabelingInstance, BackgroundArithmetic) {
  Hypergraph meet(5, 3);
  meet.add_edge({0, 1, 2});
  meet.add_edge({2, 3, 4});
  auto inst = build_labeling_instance(meet, 3, 3, 2);
  EXPECT_EQ(inst.D, 2u);
  EXPECT_EQ(inst.backgrounds, 64u);
  for (std::size_t b = 0; b < 64; ++b) {
    EXPECT_EQ(inst.coordinate(b, 1), b % 8);
    EXPECT_EQ(inst.coordinate(b, 2), b / 8);
    EXPECT_EQ(inst.coordinate(inst.replace(b, 2, 5), 2), 5u);
    EXPECT_EQ(inst.coordinate(inst.replace(b, 2, 5), 1), b % 8);
  }
  EXPECT_THROW(build_labeling_instance(meet, 3, 2, 2), std::invalid_argument);
  EXPECT_THROW(build_labeling_instance(meet, 3, 3, 3, 1000), CapacityError);
}

TEST(LabelingLemmas, SingleHyperedgeCoverOneVertex) {
  auto inst = build_labeling_instance(single_edge3(), 3, 3, 2);
  auto rep = verify_labeling_lemmas(inst, {0}, 6, {1.0, 5, 1});
  EXPECT_TRUE(rep.girth_ok);
  EXPECT_TRUE(rep.projection_ok);
  EXPECT_TRUE(rep.cover_ok);
  EXPECT_TRUE(rep.full_set_found);
  EXPECT_EQ(rep.soundness_hits, 5u);

  // Independent check of projection and cover over the same cycles.
  for (const auto& c : simple_cycles(inst.graph, 2, 6)) {
    VertexSet proj;
    for (Vertex v : c) proj.push_back(inst.base_of(v));
    EXPECT_EQ(normalized(proj), (VertexSet{0, 1, 2}));
  }
}

TEST(LabelingLemmas, EmptyCoverFailsWithCanonicalWitness) {
  auto inst = build_labeling_instance(single_edge3(), 3, 3, 2);
  auto rep = verify_labeling_lemmas(inst, {}, 6);
  EXPECT_FALSE(rep.cover_ok);
  ASSERT_TRUE(rep.cover_witness.has_value());
  EXPECT_EQ(rep.cover_witness->size(), 3u);
}

TEST(LabelingLemmas, SoundnessSearchReturnsContainedCanonicalCycle) {
  Hypergraph meet(5, 3);
  meet.add_edge({0, 1, 2});
  meet.add_edge({2, 3, 4});
  auto inst = build_labeling_instance(meet, 3, 3, 2);
  for (std::uint64_t t = 0; t < 20; ++t) {
    Stream rng(8, {t});
    std::vector<bool> in(inst.graph.size(), false);
    for (Vertex v : rng.subset(inst.graph.size(), inst.graph.size() * 9 / 10)) in[v] = true;
    auto c = labeling_soundness_search(inst, in);
    if (!c) continue;
    for (std::size_t i = 0; i < c->size(); ++i) {
      EXPECT_TRUE(in[(*c)[i]]);
      EXPECT_TRUE(inst.graph.has_edge((*c)[i], (*c)[(i + 1) % c->size()]));
    }
  }
}
