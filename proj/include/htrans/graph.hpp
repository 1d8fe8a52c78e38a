#pragma once

// Core carriers: simple graphs, uniform hypergraphs, pattern graphs and the
// promise-parameter record attached to source instances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace htrans {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

/// Raised when an exact computation would exceed its configured budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when numerical residuals exceed the acceptable bound.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const VertexSet& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Simple graph on vertices 0..n-1. Adjacency lists are kept sorted; for
/// undirected graphs both directions are stored.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  Graph() = default;
  explicit Graph(std::size_t n, bool directed = false)
      : directed_(directed), out_(n), in_(directed ? n : 0) {}

  static Graph from_edges(std::size_t n, bool directed, const std::vector<Edge>& edges) {
    Graph g(n, directed);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t size() const { return out_.size(); }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return edge_count_; }

  /// Adds u-v (u->v when directed). Duplicates collapse; returns false then.
  bool add_edge(Vertex u, Vertex v) {
    if (u >= size() || v >= size())
      throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!insert_sorted(out_[u], v)) return false;
    if (directed_) insert_sorted(in_[v], u);
    else insert_sorted(out_[v], u);
    ++edge_count_;
    return true;
  }

  bool has_edge(Vertex u, Vertex v) const {
    return u < size() && std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  /// Out-neighbours (all neighbours when undirected).
  const VertexSet& neighbors(Vertex v) const { return out_[v]; }
  const VertexSet& in_neighbors(Vertex v) const { return directed_ ? in_[v] : out_[v]; }

  std::size_t degree(Vertex v) const { return out_[v].size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : out_) d = std::max(d, a.size());
    return d;
  }

  /// Edges in lexicographic order; undirected edges reported once with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : out_[u])
        if (directed_ || u < v) result.emplace_back(u, v);
    return result;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.out_ == b.out_;
  }

 private:
  static bool insert_sorted(VertexSet& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
  }

  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Subgraph induced by a vertex subset together with the id translation.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> old id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Vertex> index(g.size(), kInfinity);
  InducedSubgraph out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (keep[v]) {
      index[v] = out.original.size();
      out.original.push_back(v);
    }
  out.graph = Graph(out.original.size(), g.directed());
  for (const auto& [u, v] : g.edges())
    if (keep[u] && keep[v]) out.graph.add_edge(index[u], index[v]);
  return out;
}

/// Induced subgraph on the complement of `removed`.
inline InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<bool> keep(g.size(), true);
  for (Vertex v : removed)
    if (v < g.size()) keep[v] = false;
  return induced_subgraph(g, keep);
}

/// k-uniform hypergraph with ordered hyperedges. The order of vertices inside
/// a hyperedge is significant: reductions map position i to pattern vertex i.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::size_t k) : n_(n), k_(k) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t uniformity() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& edge(std::size_t i) const { return edges_[i]; }

  void add_edge(std::vector<Vertex> e) {
    if (e.size() != k_)
      throw std::invalid_argument("hyperedge has " + std::to_string(e.size()) +
                                  " vertices, expected " + std::to_string(k_));
    for (Vertex v : e)
      if (v >= n_) throw std::out_of_range("hyperedge vertex " + std::to_string(v) + " out of range");
    if (normalized(e).size() != e.size())
      throw std::invalid_argument("hyperedge repeats a vertex");
    edges_.push_back(std::move(e));
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& e : edges_)
      for (Vertex v : e) ++d[v];
    return d;
  }

  std::size_t max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }

  bool is_vertex_cover(const VertexSet& cover) const {
    VertexSet c = normalized(cover);
    for (const auto& e : edges_)
      if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return contains(c, v); })) return false;
    return true;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<Vertex>> edges_;
};

enum class PatternKind { cycle, clique, star, path, custom };

inline const char* to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::cycle: return "cycle";
    case PatternKind::clique: return "clique";
    case PatternKind::star: return "star";
    case PatternKind::path: return "path";
    case PatternKind::custom: return "custom";
  }
  return "custom";
}

inline bool is_two_connected(const Graph& h);

/// The fixed pattern H on vertex set [k] = {0..k-1}.
class PatternGraph {
 public:
  PatternGraph() = default;
  PatternGraph(std::size_t k, std::vector<Graph::Edge> edges, PatternKind kind)
      : kind_(kind), graph_(Graph::from_edges(k, false, edges)) {
    two_connected_ = is_two_connected(graph_);
  }

  static PatternGraph cycle(std::size_t k) {
    if (k < 3) throw std::invalid_argument("cycle pattern needs k >= 3");
    std::vector<Graph::Edge> e;
    for (Vertex i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return PatternGraph(k, e, PatternKind::cycle);
  }
  static PatternGraph clique(std::size_t k) {
    if (k < 1) throw std::invalid_argument("clique pattern needs k >= 1");
    std::vector<Graph::Edge> e;
    for (Vertex i = 0; i < k; ++i)
      for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return PatternGraph(k, e, PatternKind::clique);
  }
  /// The k-Star K_{1,k-1}: centre 0, leaves 1..k-1.
  static PatternGraph star(std::size_t k) {
    if (k < 2) throw std::invalid_argument("star pattern needs k >= 2");
    std::vector<Graph::Edge> e;
    for (Vertex i = 1; i < k; ++i) e.emplace_back(0, i);
    return PatternGraph(k, e, PatternKind::star);
  }
  static PatternGraph path(std::size_t k) {
    if (k < 1) throw std::invalid_argument("path pattern needs k >= 1");
    std::vector<Graph::Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return PatternGraph(k, e, PatternKind::path);
  }
  static PatternGraph custom(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("pattern graphs are undirected");
    return PatternGraph(g.size(), g.edges(), PatternKind::custom);
  }

  std::size_t k() const { return graph_.size(); }
  PatternKind kind() const { return kind_; }
  bool two_connected() const { return two_connected_; }
  const Graph& graph() const { return graph_; }
  std::vector<Graph::Edge> edges() const { return graph_.edges(); }

  /// Arcs to embed: for a directed host only cycles are meaningful and the
  /// arcs follow the orientation 0->1->...->k-1->0.
  std::vector<Graph::Edge> arcs(bool directed_host) const {
    if (!directed_host) return edges();
    if (kind_ != PatternKind::cycle)
      throw std::invalid_argument("only cycle patterns can be embedded in directed graphs");
    std::vector<Graph::Edge> a;
    for (Vertex i = 0; i < k(); ++i) a.emplace_back(i, (i + 1) % k());
    return a;
  }

  std::string spec() const {
    if (kind_ == PatternKind::custom) return "custom:" + std::to_string(k());
    return std::string(to_string(kind_)) + ":" + std::to_string(k());
  }

  friend bool operator==(const PatternGraph& a, const PatternGraph& b) {
    return a.kind_ == b.kind_ && a.graph_ == b.graph_;
  }

 private:
  PatternKind kind_ = PatternKind::custom;
  bool two_connected_ = false;
  Graph graph_;
};

/// Parses `cycle:<k>`, `clique:<k>`, `star:<k>` or `path:<k>`.
inline PatternGraph parse_pattern(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad pattern spec: " + text);
  std::string kind = text.substr(0, colon);
  std::size_t pos = 0;
  unsigned long k = 0;
  try {
    k = std::stoul(text.substr(colon + 1), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pattern size in: " + text);
  }
  if (pos != text.size() - colon - 1) throw std::invalid_argument("bad pattern size in: " + text);
  if (kind == "cycle") return PatternGraph::cycle(k);
  if (kind == "clique") return PatternGraph::clique(k);
  if (kind == "star") return PatternGraph::star(k);
  if (kind == "path") return PatternGraph::path(k);
  throw std::invalid_argument("unknown pattern kind: " + kind);
}

/// Promise parameters of a hard source instance. Metadata only.
struct PromiseParams {
  double c = 0;        // completeness measure
  double s = 1;        // soundness measure
  std::size_t d = 1;   // maximum degree
  double delta = 1;    // density subset measure
  double rho = 1;      // density edge fraction
  double epsilon = 0;  // gap parameter

  void validate() const {
    if (!(c > 0 && c <= s && s <= 1)) throw std::invalid_argument("promise requires 0 < c <= s <= 1");
    if (d < 1) throw std::invalid_argument("promise requires d >= 1");
    if (!(delta > 0 && delta <= 1 && rho > 0 && rho <= 1))
      throw std::invalid_argument("promise requires 0 < delta, rho <= 1");
  }
};

// Articulation-point based 2-connectivity test (>= 3 vertices, connected, no
// cut vertex).
inline bool is_two_connected(const Graph& h) {
  const std::size_t n = h.size();
  if (n < 3) return false;
  std::vector<std::size_t> disc(n, kInfinity), low(n, 0);
  std::size_t timer = 0;
  bool cut = false;
  // Iterative DFS from vertex 0.
  struct Frame { Vertex v; Vertex parent; std::size_t next; std::size_t children; };
  std::vector<Frame> stack{{0, kInfinity, 0, 0}};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = h.neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      if (w == f.parent) continue;
      if (disc[w] == kInfinity) {
        disc[w] = low[w] = timer++;
        ++f.children;
        stack.push_back({w, f.v, 0, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (p.parent != kInfinity && low[done.v] >= disc[p.v]) cut = true;
      } else if (done.children > 1) {
        cut = true;
      }
    }
  }
  if (timer != n) return false;  // disconnected
  return !cut;
}

}  // namespace htrans
