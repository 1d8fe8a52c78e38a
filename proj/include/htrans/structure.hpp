#pragma once

// Structural algorithms on Graph: girth, shortest cycles, bounded simple-cycle
// enumeration and line graphs.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "htrans/graph.hpp"

namespace htrans {

inline bool is_two_connected(const PatternGraph& h) { return is_two_connected(h.graph()); }

/// A cycle as a vertex sequence; the closing edge back to front() is implied.
using Cycle = std::vector<Vertex>;

namespace detail {

// BFS from `root` over `g`; returns the shortest cycle through the BFS tree
// rooted there (undirected) or the shortest directed cycle through `root`.
// `best` bounds the search: candidates not shorter than best are ignored.
inline std::optional<Cycle> shortest_cycle_from(const Graph& g, Vertex root, std::size_t best) {
  const std::size_t n = g.size();
  std::vector<std::size_t> dist(n, kInfinity);
  std::vector<Vertex> parent(n, kInfinity);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  if (g.directed()) {
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (w == root) {
          Cycle c;
          for (Vertex x = u; x != kInfinity; x = parent[x]) c.push_back(x);
          std::reverse(c.begin(), c.end());
          return c;
        }
        if (dist[w] == kInfinity) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    return std::nullopt;
  }
  std::size_t found = best;
  Vertex cu = kInfinity, cw = kInfinity;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (2 * dist[u] >= found) break;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u]) {
        std::size_t len = dist[u] + dist[w] + 1;
        if (len < found) {
          found = len;
          cu = u;
          cw = w;
        }
      }
    }
  }
  if (cu == kInfinity) return std::nullopt;
  // Walk both tree paths up to their lowest common ancestor.
  std::vector<Vertex> left, right;
  Vertex a = cu, b = cw;
  while (dist[a] > dist[b]) { left.push_back(a); a = parent[a]; }
  while (dist[b] > dist[a]) { right.push_back(b); b = parent[b]; }
  while (a != b) {
    left.push_back(a);
    right.push_back(b);
    a = parent[a];
    b = parent[b];
  }
  Cycle c{a};
  for (auto it = left.rbegin(); it != left.rend(); ++it) c.push_back(*it);
  for (Vertex v : right) c.push_back(v);
  return c;
}

}  // namespace detail

/// Shortest simple cycle (directed when g is directed), searching roots in
/// increasing id order and keeping the first minimum found.
inline std::optional<Cycle> shortest_cycle(const Graph& g) {
  std::optional<Cycle> best;
  std::size_t best_len = kInfinity;
  for (Vertex r = 0; r < g.size(); ++r) {
    auto c = detail::shortest_cycle_from(g, r, best_len);
    if (c && c->size() < best_len) {
      best_len = c->size();
      best = std::move(c);
      if (best_len == (g.directed() ? 2 : 3)) break;
    }
  }
  return best;
}

/// Length of the shortest cycle, or kInfinity for acyclic graphs.
inline std::size_t girth(const Graph& g) {
  auto c = shortest_cycle(g);
  return c ? c->size() : kInfinity;
}

/// Enumerates simple cycles of length in [min_len, max_len]. Each cycle is
/// reported once, starting at its smallest vertex; undirected cycles are
/// oriented so that the second vertex is smaller than the last. The visitor
/// returns false to stop early. Returns the number of cycles visited.
inline std::size_t for_each_simple_cycle(const Graph& g, std::size_t min_len, std::size_t max_len,
                                         const std::function<bool(const Cycle&)>& visit) {
  const std::size_t n = g.size();
  const std::size_t floor_len = g.directed() ? 2 : 3;
  min_len = std::max(min_len, floor_len);
  std::size_t count = 0;
  bool stop = false;
  std::vector<bool> on_path(n, false);
  Cycle path;
  std::function<void(Vertex)> extend = [&](Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (stop) return;
      if (w == path.front()) {
        if (path.size() >= min_len && (g.directed() || path[1] < path.back())) {
          ++count;
          if (!visit(path)) stop = true;
        }
        continue;
      }
      if (w < path.front() || on_path[w] || path.size() >= max_len) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex s = 0; s < n && !stop; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  return count;
}

/// All simple cycles of length in [min_len, max_len]; throws CapacityError
/// when more than `cap` are found.
inline std::vector<Cycle> simple_cycles(const Graph& g, std::size_t min_len, std::size_t max_len,
                                        std::size_t cap = 5'000'000) {
  std::vector<Cycle> cycles;
  bool overflow = false;
  for_each_simple_cycle(g, min_len, max_len, [&](const Cycle& c) {
    if (cycles.size() >= cap) {
      overflow = true;
      return false;
    }
    cycles.push_back(c);
    return true;
  });
  if (overflow) throw CapacityError("more than " + std::to_string(cap) + " simple cycles");
  return cycles;
}

/// Line graph of an undirected graph.
struct LineGraph {
  Graph graph;
  std::vector<Graph::Edge> edge_of;  // line-graph vertex -> source edge
};

inline LineGraph line_graph(const Graph& m) {
  if (m.directed()) throw std::invalid_argument("line_graph expects an undirected graph");
  LineGraph out;
  out.edge_of = m.edges();
  out.graph = Graph(out.edge_of.size());
  std::vector<std::vector<Vertex>> incident(m.size());
  for (Vertex i = 0; i < out.edge_of.size(); ++i) {
    incident[out.edge_of[i].first].push_back(i);
    incident[out.edge_of[i].second].push_back(i);
  }
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) out.graph.add_edge(list[a], list[b]);
  return out;
}

}  // namespace htrans
