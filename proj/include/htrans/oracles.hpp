#pragma once

// Exact brute-force solvers used as ground truth: minimum hitting set over
// pattern copies (H-Transversal, hypergraph vertex cover), maximum packing of
// disjoint copies, maximum independent set, plus the greedy disjoint-copy
// baseline.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "htrans/copies.hpp"
#include "htrans/graph.hpp"

namespace htrans {

struct OracleOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct OracleResult {
  std::size_t optimum = 0;
  VertexSet vertices;            // transversal / cover / independent set
  std::vector<VertexSet> sets;   // packing witness
  std::uint64_t nodes_explored = 0;
  bool exact = true;
};

namespace detail {

inline VertexSet bits_to_set(std::uint64_t mask) {
  VertexSet s;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) s.push_back(v);
  return s;
}

class NodeCounter {
 public:
  NodeCounter(std::uint64_t budget, const char* what) : budget_(budget), what_(what) {}
  void tick() {
    if (++nodes_ > budget_)
      throw CapacityError(std::string(what_) + ": node budget of " + std::to_string(budget_) +
                          " exceeded");
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const char* what_;
};

// Minimum hitting set by branch and bound. Branches on the unhit set that
// contains the vertex of highest unhit-degree (ties: lowest vertex id, then
// lowest set index); within that set vertices are tried by decreasing degree,
// and branch i forbids the vertices tried before it.
class HittingSetSolver {
 public:
  HittingSetSolver(std::size_t n, const std::vector<VertexSet>& sets, std::uint64_t budget)
      : n_(n), sets_(sets), counter_(budget, "hitting set"), member_of_(n), hits_(sets.size(), 0),
        chosen_(n, false), forbidden_(n, false) {
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (Vertex v : sets_[s]) member_of_[v].push_back(s);
  }

  OracleResult solve() {
    // Greedy upper bound: repeatedly take the highest-degree vertex.
    best_ = greedy();
    best_size_ = best_.size();
    search(0);
    OracleResult r;
    r.optimum = best_size_;
    r.vertices = best_;
    r.nodes_explored = counter_.nodes();
    return r;
  }

 private:
  VertexSet greedy() const {
    std::vector<bool> hit(sets_.size(), false);
    VertexSet pick;
    for (;;) {
      std::vector<std::size_t> deg(n_, 0);
      bool any = false;
      for (std::size_t s = 0; s < sets_.size(); ++s)
        if (!hit[s]) {
          any = true;
          for (Vertex v : sets_[s]) ++deg[v];
        }
      if (!any) break;
      Vertex v = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
      pick.push_back(v);
      for (std::size_t s : member_of_[v]) hit[s] = true;
    }
    return normalized(pick);
  }

  // Number of pairwise disjoint unhit sets: a lower bound on what remains.
  std::size_t disjoint_lower_bound() const {
    std::vector<bool> used(n_, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      if (hits_[s]) continue;
      bool free = true;
      for (Vertex v : sets_[s]) free = free && !used[v];
      if (!free) continue;
      ++count;
      for (Vertex v : sets_[s]) used[v] = true;
    }
    return count;
  }

  void search(std::size_t depth) {
    counter_.tick();
    if (depth + disjoint_lower_bound() >= best_size_) return;
    std::vector<std::size_t> deg(n_, 0);
    bool any = false;
    for (std::size_t s = 0; s < sets_.size(); ++s)
      if (!hits_[s]) {
        any = true;
        bool open = false;
        for (Vertex v : sets_[s]) {
          ++deg[v];
          open = open || !forbidden_[v];
        }
        if (!open) return;  // this set can no longer be hit
      }
    if (!any) {
      best_size_ = depth;
      best_.clear();
      for (Vertex v = 0; v < n_; ++v)
        if (chosen_[v]) best_.push_back(v);
      return;
    }
    Vertex top = kInfinity;
    for (Vertex v = 0; v < n_; ++v)
      if (!forbidden_[v] && deg[v] > 0 && (top == kInfinity || deg[v] > deg[top])) top = v;
    if (top == kInfinity) return;  // an unhit set has only forbidden vertices
    std::size_t branch_set = kInfinity;
    for (std::size_t s : member_of_[top])
      if (!hits_[s]) {
        branch_set = s;
        break;
      }
    std::vector<Vertex> order;
    for (Vertex v : sets_[branch_set])
      if (!forbidden_[v]) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    std::vector<Vertex> newly_forbidden;
    for (Vertex v : order) {
      choose(v, true);
      search(depth + 1);
      choose(v, false);
      forbidden_[v] = true;
      newly_forbidden.push_back(v);
    }
    for (Vertex v : newly_forbidden) forbidden_[v] = false;
  }

  void choose(Vertex v, bool on) {
    chosen_[v] = on;
    for (std::size_t s : member_of_[v]) hits_[s] += on ? 1 : -1;
  }

  std::size_t n_;
  const std::vector<VertexSet>& sets_;
  NodeCounter counter_;
  std::vector<std::vector<std::size_t>> member_of_;
  std::vector<int> hits_;
  std::vector<bool> chosen_;
  std::vector<bool> forbidden_;
  VertexSet best_;
  std::size_t best_size_ = 0;
};

// Maximum family of pairwise disjoint sets. Branches on the remaining set of
// highest conflict degree (ties: lowest index): take it, or discard it.
class SetPackingSolver {
 public:
  SetPackingSolver(std::size_t n, const std::vector<VertexSet>& sets, std::uint64_t budget)
      : sets_(sets), counter_(budget, "set packing"), conflicts_(sets.size()), alive_(sets.size(), true) {
    std::vector<std::vector<std::size_t>> member_of(n);
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (Vertex v : sets_[s]) member_of[v].push_back(s);
    for (const auto& list : member_of)
      for (std::size_t a : list)
        for (std::size_t b : list)
          if (a != b) conflicts_[a].push_back(b);
    for (auto& c : conflicts_) c = normalized(c);
    min_set_size_ = kInfinity;
    for (const auto& s : sets_) min_set_size_ = std::min(min_set_size_, s.size());
    n_ = n;
  }

  OracleResult solve() {
    search(0, sets_.size(), n_);
    OracleResult r;
    r.optimum = best_.size();
    for (std::size_t s : best_) r.sets.push_back(sets_[s]);
    r.nodes_explored = counter_.nodes();
    return r;
  }

 private:
  void search(std::size_t taken, std::size_t alive_count, std::size_t free_vertices) {
    counter_.tick();
    if (taken > best_.size()) best_ = current_;
    std::size_t bound = alive_count;
    if (min_set_size_ > 0 && min_set_size_ != kInfinity)
      bound = std::min(bound, free_vertices / min_set_size_);
    if (taken + bound <= best_.size()) return;
    std::size_t pick = kInfinity, pick_deg = 0;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      if (!alive_[s]) continue;
      std::size_t d = 0;
      for (std::size_t t : conflicts_[s]) d += alive_[t];
      if (pick == kInfinity || d > pick_deg) {
        pick = s;
        pick_deg = d;
      }
    }
    if (pick == kInfinity) return;
    // Take `pick`: kill it and its live conflicts.
    std::vector<std::size_t> killed{pick};
    alive_[pick] = false;
    for (std::size_t t : conflicts_[pick])
      if (alive_[t]) {
        alive_[t] = false;
        killed.push_back(t);
      }
    current_.push_back(pick);
    search(taken + 1, alive_count - killed.size(), free_vertices - sets_[pick].size());
    current_.pop_back();
    for (std::size_t t : killed) alive_[t] = true;
    if (pick_deg == 0) return;  // taking an isolated set is never worse
    alive_[pick] = false;
    search(taken, alive_count - 1, free_vertices);
    alive_[pick] = true;
  }

  const std::vector<VertexSet>& sets_;
  NodeCounter counter_;
  std::vector<VertexSet> conflicts_;
  std::vector<bool> alive_;
  std::vector<std::size_t> current_, best_;
  std::size_t min_set_size_ = 0;
  std::size_t n_ = 0;
};

}  // namespace detail

/// Minimum set hitting every given set.
inline OracleResult min_hitting_set(std::size_t n, const std::vector<VertexSet>& sets,
                                    OracleOptions opts = {}) {
  for (const auto& s : sets)
    if (s.empty()) throw std::invalid_argument("cannot hit an empty set");
  return detail::HittingSetSolver(n, sets, opts.node_budget).solve();
}

/// Maximum number of pairwise disjoint sets.
inline OracleResult max_disjoint_sets(std::size_t n, const std::vector<VertexSet>& sets,
                                      OracleOptions opts = {}) {
  return detail::SetPackingSolver(n, sets, opts.node_budget).solve();
}

inline OracleResult min_h_transversal(const Graph& g, const PatternGraph& h, OracleOptions opts = {}) {
  auto copies = enumerate_copies(g, h).copies;
  return min_hitting_set(g.size(), copies, opts);
}

inline OracleResult max_h_packing(const Graph& g, const PatternGraph& h, OracleOptions opts = {}) {
  auto copies = enumerate_copies(g, h).copies;
  return max_disjoint_sets(g.size(), copies, opts);
}

inline OracleResult min_hypergraph_vertex_cover(const Hypergraph& p, OracleOptions opts = {}) {
  std::vector<VertexSet> sets;
  for (const auto& e : p.edges()) sets.push_back(normalized(e));
  return min_hitting_set(p.vertex_count(), sets, opts);
}

/// Maximum independent set on at most 64 vertices; branches on the vertex of
/// highest remaining degree (ties: lowest id).
inline OracleResult max_independent_set(const Graph& g, OracleOptions opts = {}) {
  const std::size_t n = g.size();
  if (n > 64) throw CapacityError("max_independent_set supports at most 64 vertices");
  if (g.directed()) throw std::invalid_argument("max_independent_set expects an undirected graph");
  std::vector<std::uint64_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
  detail::NodeCounter counter(opts.node_budget, "independent set");
  std::uint64_t best = 0;
  auto size_of = [](std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); };
  auto search = [&](auto&& self, std::uint64_t rest, std::uint64_t current) -> void {
    counter.tick();
    if (size_of(current) + size_of(rest) <= size_of(best)) return;
    // Isolated (within rest) vertices are always taken.
    Vertex top = kInfinity;
    std::size_t top_deg = 0;
    for (std::uint64_t m = rest; m; m &= m - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(m));
      std::size_t d = size_of(nbr[v] & rest);
      if (d == 0) {
        current |= std::uint64_t{1} << v;
        rest &= ~(std::uint64_t{1} << v);
      } else if (top == kInfinity || d > top_deg) {
        top = v;
        top_deg = d;
      }
    }
    if (top == kInfinity) {
      if (size_of(current) > size_of(best)) best = current;
      return;
    }
    if (size_of(current) + size_of(rest) <= size_of(best)) return;
    const std::uint64_t bit = std::uint64_t{1} << top;
    self(self, rest & ~bit & ~nbr[top], current | bit);
    self(self, rest & ~bit, current);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search(search, all, 0);
  OracleResult r;
  r.optimum = size_of(best);
  r.vertices = detail::bits_to_set(best);
  r.nodes_explored = counter.nodes();
  return r;
}

struct GreedyBaseline {
  std::vector<VertexSet> packing;
  VertexSet transversal;
};

/// Greedily keeps copies (in lexicographic order) disjoint from those already
/// kept. The kept copies form a maximal packing; their union hits every copy.
inline GreedyBaseline greedy_disjoint_baseline(const Graph& g, const PatternGraph& h) {
  GreedyBaseline out;
  std::vector<bool> used(g.size(), false);
  for (const auto& c : enumerate_copies(g, h).copies) {
    if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return used[v]; })) continue;
    out.packing.push_back(c);
    for (Vertex v : c) {
      used[v] = true;
      out.transversal.push_back(v);
    }
  }
  out.transversal = normalized(out.transversal);
  return out;
}

}  // namespace htrans
