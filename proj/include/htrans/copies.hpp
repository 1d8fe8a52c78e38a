#pragma once

// Enumeration of pattern copies. A copy is a k-subset of host vertices whose
// induced subgraph contains the pattern as a (not necessarily induced)
// subgraph; on a directed host the pattern must be a cycle and containment
// means a directed k-cycle on the subset.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "htrans/graph.hpp"

namespace htrans {

struct CopyList {
  std::vector<VertexSet> copies;  // sorted lexicographically
  bool truncated = false;
};

namespace detail {

// Backtracking monomorphism search. Pattern vertices are matched in an order
// where every vertex after the first of its component has an earlier
// neighbour, so candidates come from host adjacency lists.
class CopyMatcher {
 public:
  CopyMatcher(const Graph& host, const PatternGraph& pattern)
      : host_(host), k_(pattern.k()), arcs_(pattern.arcs(host.directed())) {
    order_pattern(pattern);
  }

  // Calls visit(sorted vertex set) for each embedding; visit returns false
  // to stop.
  template <typename Visit>
  void run(Visit&& visit) {
    if (k_ == 0 || k_ > host_.size()) return;
    image_.assign(k_, kInfinity);
    used_.assign(host_.size(), false);
    stop_ = false;
    extend(0, visit);
  }

 private:
  void order_pattern(const PatternGraph& pattern) {
    const Graph& h = pattern.graph();
    std::vector<bool> placed(k_, false);
    pattern_degree_.assign(k_, 0);
    for (Vertex i = 0; i < k_; ++i) pattern_degree_[i] = h.degree(i);
    while (order_.size() < k_) {
      // Start a component at the highest-degree unplaced vertex.
      Vertex start = kInfinity;
      for (Vertex i = 0; i < k_; ++i)
        if (!placed[i] && (start == kInfinity || h.degree(i) > h.degree(start))) start = i;
      placed[start] = true;
      order_.push_back(start);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        for (Vertex j : h.neighbors(order_[head]))
          if (!placed[j]) {
            placed[j] = true;
            order_.push_back(j);
          }
      }
    }
    position_.assign(k_, 0);
    for (std::size_t p = 0; p < k_; ++p) position_[order_[p]] = p;
    // For each position: arcs to earlier-placed pattern vertices.
    checks_.assign(k_, {});
    for (const auto& [a, b] : arcs_) {
      std::size_t pa = position_[a], pb = position_[b];
      if (pa < pb) checks_[pb].push_back({a, true});   // need host arc image[a] -> new
      else checks_[pa].push_back({b, false});          // need host arc new -> image[b]
    }
  }

  struct Check {
    Vertex other;
    bool other_is_tail;
  };

  template <typename Visit>
  void extend(std::size_t pos, Visit& visit) {
    if (stop_) return;
    if (pos == k_) {
      VertexSet s(image_.begin(), image_.end());
      std::sort(s.begin(), s.end());
      if (!visit(s)) stop_ = true;
      return;
    }
    const Vertex pv = order_[pos];
    const auto& checks = checks_[pos];
    auto try_candidate = [&](Vertex c) {
      if (used_[c] || host_.degree(c) < host_min_degree(pv)) return;
      for (const Check& ch : checks) {
        Vertex o = image_[ch.other];
        if (ch.other_is_tail ? !host_.has_edge(o, c) : !host_.has_edge(c, o)) return;
      }
      used_[c] = true;
      image_[pv] = c;
      extend(pos + 1, visit);
      image_[pv] = kInfinity;
      used_[c] = false;
    };
    if (!checks.empty()) {
      const Check& anchor = checks.front();
      Vertex o = image_[anchor.other];
      const auto& pool = anchor.other_is_tail ? host_.neighbors(o) : host_.in_neighbors(o);
      for (Vertex c : pool) {
        try_candidate(c);
        if (stop_) return;
      }
    } else {
      for (Vertex c = 0; c < host_.size(); ++c) {
        try_candidate(c);
        if (stop_) return;
      }
    }
  }

  // Degree pruning: undirected hosts need degree >= pattern degree. For
  // directed cycles each vertex needs out-degree >= 1, which the adjacency
  // checks already enforce.
  std::size_t host_min_degree(Vertex pv) const {
    return host_.directed() ? 0 : pattern_degree_[pv];
  }

  const Graph& host_;
  std::size_t k_;
  std::vector<Graph::Edge> arcs_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> pattern_degree_;
  std::vector<std::vector<Check>> checks_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  bool stop_ = false;
};

}  // namespace detail

/// All copies of `h` in `g`, deduplicated as vertex sets. With a cap, stops
/// after `cap` distinct copies and sets `truncated`; with `exact` set, an
/// overflow raises CapacityError instead.
inline CopyList enumerate_copies(const Graph& g, const PatternGraph& h,
                                 std::optional<std::size_t> cap = std::nullopt,
                                 bool exact = false) {
  std::set<VertexSet> found;
  CopyList out;
  detail::CopyMatcher matcher(g, h);
  matcher.run([&](const VertexSet& s) {
    if (found.count(s)) return true;
    if (cap && found.size() >= *cap) {
      out.truncated = true;
      return false;
    }
    found.insert(s);
    return true;
  });
  if (out.truncated && exact)
    throw CapacityError("more than " + std::to_string(*cap) + " copies of " + h.spec());
  out.copies.assign(found.begin(), found.end());
  return out;
}

/// True iff the vertex set `s` (any size) contains a copy of `h`.
inline bool contains_copy(const Graph& g, const PatternGraph& h, const VertexSet& s) {
  std::vector<bool> keep(g.size(), false);
  for (Vertex v : s) keep[v] = true;
  auto sub = induced_subgraph(g, keep);
  bool any = false;
  detail::CopyMatcher matcher(sub.graph, h);
  matcher.run([&](const VertexSet&) {
    any = true;
    return false;
  });
  return any;
}

/// Copies surviving in the subgraph induced by V \ removed, in host ids.
inline CopyList copies_avoiding(const Graph& g, const PatternGraph& h, const VertexSet& removed,
                                std::optional<std::size_t> cap = std::nullopt, bool exact = false) {
  auto sub = remove_vertices(g, removed);
  CopyList local = enumerate_copies(sub.graph, h, cap, exact);
  for (auto& c : local.copies) {
    for (auto& v : c) v = sub.original[v];
    std::sort(c.begin(), c.end());
  }
  std::sort(local.copies.begin(), local.copies.end());
  return local;
}

}  // namespace htrans
