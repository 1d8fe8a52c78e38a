#pragma once

// Reductions towards H-Packing.
//
// Line-graph construction: from a graph M of max degree <= k and girth > k,
// build L(M) padded so that each Star(v) (edges at v plus padding) has k
// vertices and induces a k-clique. Packings of H then correspond to
// independent sets of M.
//
// Cloud-matching construction: blow each vertex of M0 up into a cloud of B
// vertices, join adjacent clouds by random permutation matchings, delete
// one vertex from every cycle of length <= g, then sparsify and drop
// high-degree vertices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "htrans/copies.hpp"
#include "htrans/graph.hpp"
#include "htrans/random.hpp"
#include "htrans/structure.hpp"

namespace htrans {

struct StarMap {
  std::vector<VertexSet> stars;  // stars[v] = Star(v), sorted

  std::size_t size() const { return stars.size(); }
  const VertexSet& operator[](Vertex v) const { return stars[v]; }
  friend bool operator==(const StarMap&, const StarMap&) = default;
};

struct PackingInstance {
  Graph graph;
  StarMap stars;
  std::vector<Graph::Edge> edge_of;  // line-graph vertex -> edge of M
  std::size_t line_vertices = 0;     // ids below this are line-graph vertices
};

inline std::string describe_cycle(const Cycle& c) {
  std::string s;
  for (Vertex v : c) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

/// With `enforce` false the girth and 2-connectivity preconditions are
/// skipped (negative controls); the degree bound is always required since
/// stars cannot exceed k vertices.
inline PackingInstance build_line_graph_packing_instance(const Graph& m, const PatternGraph& h,
                                                         bool enforce = true) {
  if (m.directed()) throw std::invalid_argument("line-graph packing needs an undirected source");
  const std::size_t k = h.k();
  for (Vertex v = 0; v < m.size(); ++v)
    if (m.degree(v) > k)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)) +
                                  " > k = " + std::to_string(k));
  if (enforce) {
    if (!h.two_connected()) throw std::invalid_argument("pattern " + h.spec() + " is not 2-connected");
    if (auto c = shortest_cycle(m); c && c->size() <= k)
      throw std::invalid_argument("source has cycle of length " + std::to_string(c->size()) + " <= k: " +
                                  describe_cycle(*c));
  }
  LineGraph lg = line_graph(m);
  PackingInstance out;
  out.edge_of = lg.edge_of;
  out.line_vertices = lg.edge_of.size();
  out.stars.stars.assign(m.size(), {});
  for (Vertex e = 0; e < lg.edge_of.size(); ++e) {
    out.stars.stars[lg.edge_of[e].first].push_back(e);
    out.stars.stars[lg.edge_of[e].second].push_back(e);
  }
  std::size_t next = out.line_vertices;
  for (Vertex v = 0; v < m.size(); ++v)
    while (out.stars.stars[v].size() < k) out.stars.stars[v].push_back(next++);
  out.graph = Graph(next);
  for (const auto& [a, b] : lg.graph.edges()) out.graph.add_edge(a, b);
  for (auto& s : out.stars.stars) {
    s = normalized(std::move(s));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) out.graph.add_edge(s[i], s[j]);
  }
  return out;
}

struct StarContainmentReport {
  bool ok = true;
  std::size_t copies_checked = 0;
  std::optional<VertexSet> violation;
};

inline StarContainmentReport verify_copies_within_stars(const Graph& g, const PatternGraph& h, const StarMap& stars,
                                                        std::optional<std::size_t> cap = std::nullopt) {
  StarContainmentReport rep;
  auto copies = enumerate_copies(g, h, cap, true);
  rep.copies_checked = copies.copies.size();
  for (const auto& c : copies.copies) {
    bool inside = std::any_of(stars.stars.begin(), stars.stars.end(),
                              [&](const VertexSet& s) { return is_subset(c, s); });
    if (!inside) {
      rep.ok = false;
      rep.violation = c;
      break;
    }
  }
  return rep;
}

enum class MisStage { raw, girth_repaired, sparsified, truncated };

inline const char* to_string(MisStage s) {
  switch (s) {
    case MisStage::raw: return "raw";
    case MisStage::girth_repaired: return "girth_repaired";
    case MisStage::sparsified: return "sparsified";
    case MisStage::truncated: return "truncated";
  }
  return "?";
}

struct Deletion {
  Cycle cycle;    // raw ids
  Vertex victim;  // raw id
};

/// Raw id of a cloud vertex is base * B + label. `graph` is compacted to the
/// surviving vertices; original_ids maps back to raw ids.
struct MisReductionOutput {
  Graph source;
  Graph graph;
  std::vector<Vertex> original_ids;
  std::size_t B = 0, a = 0, g = 0, k = 0;
  std::uint64_t seed = 0;
  MisStage stage = MisStage::raw;
  std::vector<Deletion> deleted;
  std::vector<Vertex> truncated;                               // raw ids removed for degree
  std::vector<std::vector<std::vector<std::size_t>>> matchings;  // [edge][t][label]
  double keep_probability = 1.0;

  std::pair<Vertex, std::size_t> cloud_of(Vertex compact) const {
    Vertex raw = original_ids[compact];
    return {raw / B, raw % B};
  }
  std::size_t removed_count() const { return deleted.size() + truncated.size(); }
};

namespace detail {

inline MisReductionOutput compact(MisReductionOutput out, const Graph& raw_graph_on_ids,
                                  const std::vector<bool>& keep) {
  auto sub = induced_subgraph(raw_graph_on_ids, keep);
  std::vector<Vertex> ids;
  ids.reserve(sub.original.size());
  for (Vertex v : sub.original) ids.push_back(out.original_ids[v]);
  out.graph = std::move(sub.graph);
  out.original_ids = std::move(ids);
  return out;
}

}  // namespace detail

/// With `repair` false the raw matching union is returned (stage raw).
inline MisReductionOutput build_mis_girth_instance(const Graph& m0, std::size_t B, std::size_t a, std::size_t g,
                                                   std::uint64_t seed, bool repair = true) {
  if (m0.directed()) throw std::invalid_argument("cloud matching needs an undirected source");
  if (B < 1) throw std::invalid_argument("B must be >= 1");
  MisReductionOutput out;
  out.source = m0;
  out.B = B;
  out.a = a;
  out.g = g;
  out.seed = seed;
  const std::size_t N = m0.size() * B;
  out.graph = Graph(N);
  out.original_ids.resize(N);
  for (Vertex v = 0; v < N; ++v) out.original_ids[v] = v;
  const auto edges = m0.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    Stream rng(seed, {e});
    out.matchings.emplace_back();
    for (std::size_t t = 0; t < a; ++t) {
      auto pi = rng.permutation(B);
      for (std::size_t i = 0; i < B; ++i) out.graph.add_edge(u * B + i, v * B + pi[i]);
      out.matchings.back().push_back(std::move(pi));
    }
  }
  if (!repair) return out;

  // Girth repair on the raw graph; `alive` marks survivors.
  const Graph raw = out.graph;
  std::vector<bool> alive(N, true);
  for (;;) {
    auto sub = induced_subgraph(raw, alive);
    auto c = shortest_cycle(sub.graph);
    if (!c || c->size() > g) break;
    Cycle cycle;
    for (Vertex v : *c) cycle.push_back(sub.original[v]);
    Vertex victim = *std::min_element(cycle.begin(), cycle.end());
    alive[victim] = false;
    out.deleted.push_back({std::move(cycle), victim});
  }
  out = detail::compact(std::move(out), raw, alive);
  out.stage = MisStage::girth_repaired;
  return out;
}

inline VertexSet completeness_independent_set(const MisReductionOutput& out, const VertexSet& i0) {
  const VertexSet base = normalized(i0);
  for (Vertex u : base) {
    if (u >= out.source.size()) throw std::out_of_range("independent-set vertex out of range");
    for (Vertex v : out.source.neighbors(u))
      if (contains(base, v)) throw std::invalid_argument("i0 is not independent");
  }
  VertexSet result;
  for (Vertex v = 0; v < out.graph.size(); ++v)
    if (contains(base, out.cloud_of(v).first)) result.push_back(v);
  for (Vertex u : result)
    for (Vertex v : out.graph.neighbors(u))
      if (contains(result, v)) throw std::logic_error("lifted independent set is not independent");
  if (result.size() + out.removed_count() < base.size() * out.B)
    throw std::logic_error("lifted independent set lost more vertices than were deleted");
  return result;
}

/// Keeps each edge with probability min(1, k n' / |E'|) and then removes
/// every vertex of degree > 10k.
inline MisReductionOutput sparsify_and_truncate(MisReductionOutput out, std::size_t k, std::uint64_t seed) {
  if (out.stage != MisStage::girth_repaired)
    throw std::invalid_argument("sparsify_and_truncate expects a girth-repaired instance");
  const std::size_t before_girth = girth(out.graph);
  const std::size_t n = out.graph.size(), m = out.graph.edge_count();
  out.keep_probability =
      m == 0 ? 1.0 : std::min(1.0, static_cast<double>(k) * static_cast<double>(n) / static_cast<double>(m));
  out.k = k;
  Stream rng(seed, {0x7370617273ULL});
  Graph sparse(n);
  for (const auto& [u, v] : out.graph.edges())
    if (rng.bernoulli(out.keep_probability)) sparse.add_edge(u, v);
  out.stage = MisStage::sparsified;
  std::vector<bool> keep(n, true);
  for (Vertex v = 0; v < n; ++v)
    if (sparse.degree(v) > 10 * k) {
      keep[v] = false;
      out.truncated.push_back(out.original_ids[v]);
    }
  out = detail::compact(std::move(out), sparse, keep);
  out.stage = MisStage::truncated;
  if (girth(out.graph) < before_girth) throw std::logic_error("girth decreased under deletion");
  if (out.graph.max_degree() > 10 * k) throw std::logic_error("truncation left a vertex of degree > 10k");
  return out;
}

/// Raised when the composed pipeline cannot meet the line-graph degree bound.
class DegreeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineOutput {
  PackingInstance packing;
  MisReductionOutput mis;
  bool sparsified = false;
};

/// Cloud matching with g = k, then (only if the degree exceeds k)
/// sparsification with budget floor(k/10), then the line-graph construction.
inline PipelineOutput pipeline_mis_to_packing(const Graph& m0, const PatternGraph& h, std::size_t B, std::size_t a,
                                              std::uint64_t seed) {
  if (!h.two_connected()) throw std::invalid_argument("pattern " + h.spec() + " is not 2-connected");
  PipelineOutput res;
  res.mis = build_mis_girth_instance(m0, B, a, h.k(), seed);
  if (res.mis.graph.max_degree() > h.k()) {
    res.mis = sparsify_and_truncate(std::move(res.mis), h.k() / 10, derive_seed(seed, {0x70697065ULL}));
    res.sparsified = true;
  }
  if (res.mis.graph.max_degree() > h.k())
    throw DegreeBoundError("max degree " + std::to_string(res.mis.graph.max_degree()) + " > k = " +
                           std::to_string(h.k()) + " after truncation (n = " + std::to_string(res.mis.graph.size()) +
                           ", m = " + std::to_string(res.mis.graph.edge_count()) + ")");
  res.packing = build_line_graph_packing_instance(res.mis.graph, h);
  return res;
}

}  // namespace htrans
