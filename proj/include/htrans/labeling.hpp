#pragma once

// Labeling gadget on [B]^k and the product reduction that turns a k-uniform
// hypergraph into a directed graph whose short cycles all come from
// hyperedges.
//
// Gadget coordinates are 1-based; the vertex id of x is
// sum_j (x_j - 1) B^(j-1). A color-i edge (1 <= i <= k) strictly increases
// coordinate i, strictly decreases coordinate i+1 (mod k) and keeps the rest.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "htrans/graph.hpp"
#include "htrans/random.hpp"
#include "htrans/structure.hpp"

namespace htrans {

namespace detail {

// base^exp, or kInfinity when the result would exceed `limit`.
inline std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return kInfinity;
    r *= base;
  }
  return r > limit ? kInfinity : r;
}

}  // namespace detail

struct LabelingGadget {
  std::size_t k = 0;
  std::size_t B = 0;
  Graph graph;  // directed, B^k vertices

  std::size_t size() const { return graph.size(); }

  std::vector<std::size_t> coords(Vertex id) const {
    std::vector<std::size_t> x(k);
    for (std::size_t j = 0; j < k; ++j, id /= B) x[j] = id % B + 1;
    return x;
  }

  Vertex id(const std::vector<std::size_t>& x) const {
    Vertex v = 0;
    for (std::size_t j = k; j-- > 0;) v = v * B + (x[j] - 1);
    return v;
  }

  /// Color of u -> v recomputed from the coordinates; 0 if the pair does not
  /// follow the edge rule.
  std::size_t color(Vertex u, Vertex v) const {
    auto x = coords(u), y = coords(v);
    std::size_t up = kInfinity, changed = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (x[j] != y[j]) {
        ++changed;
        if (y[j] > x[j]) {
          if (up != kInfinity) return 0;
          up = j;
        }
      }
    if (changed != 2 || up == kInfinity) return 0;
    std::size_t down = (up + 1) % k;
    return y[down] < x[down] ? up + 1 : 0;
  }
};

inline LabelingGadget build_labeling_gadget(std::size_t k, std::size_t B, std::size_t max_vertices = 1u << 20) {
  if (k < 3) throw std::invalid_argument("labeling gadget needs k >= 3");
  if (B < 2) throw std::invalid_argument("labeling gadget needs B >= 2");
  const std::size_t n = detail::checked_pow(B, k, max_vertices);
  if (n == kInfinity)
    throw CapacityError("gadget has more than " + std::to_string(max_vertices) + " vertices");
  LabelingGadget l{k, B, Graph(n, true)};
  for (Vertex u = 0; u < n; ++u) {
    auto x = l.coords(u);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = (i + 1) % k;
      auto y = x;
      for (std::size_t up = x[i] + 1; up <= B; ++up)
        for (std::size_t down = 1; down < x[j]; ++down) {
          y[i] = up;
          y[j] = down;
          l.graph.add_edge(u, l.id(y));
        }
    }
  }
  return l;
}

/// Copy of the gadget with the arc u -> v removed.
inline LabelingGadget without_edge(const LabelingGadget& l, Vertex u, Vertex v) {
  LabelingGadget out{l.k, l.B, Graph(l.size(), true)};
  for (const auto& [a, b] : l.graph.edges())
    if (a != u || b != v) out.graph.add_edge(a, b);
  return out;
}

struct GadgetReport {
  std::size_t girth = kInfinity;
  bool girth_ok = false;     // girth == k
  bool colorful_ok = true;   // every simple cycle uses all k colors
  std::size_t cycles_checked = 0;
  std::optional<Cycle> counterexample;
  bool pass() const { return girth_ok && colorful_ok; }
};

inline GadgetReport verify_gadget_properties(const LabelingGadget& l, std::size_t max_vertices = 64) {
  if (l.size() > max_vertices)
    throw CapacityError("gadget has " + std::to_string(l.size()) + " vertices, limit " + std::to_string(max_vertices));
  GadgetReport rep;
  for_each_simple_cycle(l.graph, 2, l.size(), [&](const Cycle& c) {
    ++rep.cycles_checked;
    rep.girth = std::min(rep.girth, c.size());
    std::vector<bool> seen(l.k + 1, false);
    for (std::size_t i = 0; i < c.size(); ++i) seen[l.color(c[i], c[(i + 1) % c.size()])] = true;
    bool all = true;
    for (std::size_t i = 1; i <= l.k; ++i) all = all && seen[i];
    if (!all && rep.colorful_ok) {
      rep.colorful_ok = false;
      rep.counterexample = c;
    }
    return true;
  });
  rep.girth_ok = rep.girth == l.k;
  if (!rep.girth_ok && !rep.counterexample && rep.girth != kInfinity) rep.counterexample = shortest_cycle(l.graph);
  return rep;
}

/// True iff c[0] -> c[1] -> ... -> c[k-1] -> c[0] are gadget arcs colored
/// 1, 2, ..., k in that order.
inline bool is_ordered_colorful(const LabelingGadget& l, const Cycle& c) {
  if (c.size() != l.k) return false;
  for (std::size_t i = 0; i < l.k; ++i) {
    Vertex u = c[i], v = c[(i + 1) % l.k];
    if (!l.graph.has_edge(u, v) || l.color(u, v) != i + 1) return false;
  }
  return true;
}

/// Constructive search for an ordered colorful k-cycle inside s. Picks the
/// lowest-id x in s that is not the lowest point of s on any of its k axis
/// lines; Q_i is x with coordinate i lowered to the nearest point of s on
/// that line. Succeeds whenever |s| > k B^(k-1).
inline std::optional<Cycle> find_colorful_cycle(const LabelingGadget& l, const VertexSet& s) {
  std::vector<bool> in(l.size(), false);
  for (Vertex v : s) {
    if (v >= l.size()) throw std::out_of_range("subset vertex out of range");
    in[v] = true;
  }
  std::vector<Vertex> stride(l.k, 1);
  for (std::size_t j = 1; j < l.k; ++j) stride[j] = stride[j - 1] * l.B;
  for (Vertex x : normalized(s)) {
    auto cx = l.coords(x);
    Cycle q(l.k);
    bool ok = true;
    for (std::size_t i = 0; i < l.k && ok; ++i) {
      ok = false;
      for (std::size_t z = cx[i] - 1; z >= 1; --z) {
        Vertex cand = x - (cx[i] - z) * stride[i];
        if (in[cand]) {
          q[i] = cand;
          ok = true;
          break;
        }
      }
    }
    if (ok) return q;
  }
  return std::nullopt;
}

/// All ordered colorful k-cycles of the gadget, each starting at its
/// color-1 arc.
inline std::vector<Cycle> colorful_cycles(const LabelingGadget& l) {
  std::vector<Cycle> out;
  for_each_simple_cycle(l.graph, l.k, l.k, [&](const Cycle& c) {
    for (std::size_t r = 0; r < l.k; ++r) {
      Cycle rot(l.k);
      for (std::size_t i = 0; i < l.k; ++i) rot[i] = c[(r + i) % l.k];
      if (is_ordered_colorful(l, rot)) {
        out.push_back(std::move(rot));
        break;
      }
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct OuterColoring {
  std::vector<std::size_t> colors;  // 1-based, per hyperedge
  std::size_t used = 0;
  long double bound = 0;            // (d k)^kprime + 1
};

/// Greedy coloring in hyperedge order so that hyperedges within distance
/// kprime of each other in the intersection graph get distinct colors.
inline OuterColoring outer_coloring(const Hypergraph& p, std::size_t kprime) {
  const std::size_t m = p.edge_count();
  std::vector<std::vector<std::size_t>> at(p.vertex_count());
  for (std::size_t h = 0; h < m; ++h)
    for (Vertex v : p.edge(h)) at[v].push_back(h);
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& list : at)
    for (std::size_t a : list)
      for (std::size_t b : list)
        if (a != b) adj[a].push_back(b);
  for (auto& a : adj) a = normalized(std::move(a));

  OuterColoring oc;
  oc.colors.assign(m, 0);
  std::vector<std::size_t> dist(m, kInfinity);
  for (std::size_t h = 0; h < m; ++h) {
    std::vector<std::size_t> reached{h};
    dist[h] = 0;
    std::vector<bool> taken(m + 2, false);
    for (std::size_t head = 0; head < reached.size(); ++head) {
      std::size_t f = reached[head];
      if (dist[f] == kprime) continue;
      for (std::size_t g : adj[f])
        if (dist[g] == kInfinity) {
          dist[g] = dist[f] + 1;
          reached.push_back(g);
          if (oc.colors[g] != 0) taken[oc.colors[g]] = true;
        }
    }
    for (std::size_t f : reached) dist[f] = kInfinity;
    std::size_t c = 1;
    while (taken[c]) ++c;
    oc.colors[h] = c;
    oc.used = std::max(oc.used, c);
  }
  const long double dk = static_cast<long double>(p.max_degree()) * static_cast<long double>(p.uniformity());
  oc.bound = std::pow(dk, static_cast<long double>(kprime)) + 1.0L;
  if (static_cast<long double>(oc.used) > oc.bound) throw std::logic_error("outer coloring exceeds (dk)^k' + 1");
  return oc;
}

/// Product instance on V_P x (V_L)^D with D = max(1, colors used). Vertex
/// (v, a) has id v * L^D + sum_q a_q L^(q-1), L = B^k, a_q a gadget id.
struct LabelingInstance {
  Graph graph;
  Hypergraph source;
  LabelingGadget gadget;
  OuterColoring outer;
  std::size_t kprime = 0;
  std::size_t D = 1;
  std::size_t L = 1;
  std::size_t backgrounds = 1;  // L^D

  Vertex vertex(Vertex v, std::size_t background) const { return v * backgrounds + background; }
  Vertex base_of(Vertex id) const { return id / backgrounds; }
  std::size_t background_of(Vertex id) const { return id % backgrounds; }
  std::size_t stride(std::size_t q) const {  // q is 1-based
    std::size_t s = 1;
    for (std::size_t i = 1; i < q; ++i) s *= L;
    return s;
  }
  std::size_t coordinate(std::size_t background, std::size_t q) const { return background / stride(q) % L; }
  std::size_t replace(std::size_t background, std::size_t q, Vertex x) const {
    const std::size_t s = stride(q);
    return background - coordinate(background, q) * s + x * s;
  }
};

inline LabelingInstance build_labeling_instance(const Hypergraph& p, std::size_t k, std::size_t kprime, std::size_t B,
                                                std::size_t max_vertices = 1u << 22) {
  if (p.uniformity() != k && p.edge_count() > 0)
    throw std::invalid_argument("hypergraph uniformity does not match k");
  if (kprime < k) throw std::invalid_argument("kprime must be >= k");
  LabelingInstance inst;
  inst.source = p;
  inst.kprime = kprime;
  inst.gadget = build_labeling_gadget(k, B, max_vertices);
  inst.outer = outer_coloring(p, kprime);
  inst.D = std::max<std::size_t>(1, inst.outer.used);
  inst.L = inst.gadget.size();
  inst.backgrounds = detail::checked_pow(inst.L, inst.D, max_vertices);
  if (inst.backgrounds == kInfinity || (p.vertex_count() > 0 && inst.backgrounds > max_vertices / p.vertex_count()))
    throw CapacityError("labeling instance exceeds " + std::to_string(max_vertices) + " vertices");
  inst.graph = Graph(p.vertex_count() * inst.backgrounds, true);

  std::vector<std::vector<Graph::Edge>> arcs_by_color(k + 1);
  for (const auto& [x, y] : inst.gadget.graph.edges()) arcs_by_color[inst.gadget.color(x, y)].push_back({x, y});
  for (std::size_t h = 0; h < p.edge_count(); ++h) {
    const auto& e = p.edge(h);
    const std::size_t q = inst.outer.colors[h];
    for (std::size_t b = 0; b < inst.backgrounds; ++b) {
      if (inst.coordinate(b, q) != 0) continue;  // coordinate q is overwritten
      for (std::size_t i = 0; i < k; ++i)
        for (const auto& [x, y] : arcs_by_color[i + 1])
          inst.graph.add_edge(inst.vertex(e[i], inst.replace(b, q, x)),
                              inst.vertex(e[(i + 1) % k], inst.replace(b, q, y)));
    }
  }
  return inst;
}

/// ((v^1, a_{q->Q_1}), ..., (v^k, a_{q->Q_k})) for hyperedge h with outer
/// color q.
inline Cycle canonical_cycle(const LabelingInstance& inst, std::size_t h, const Cycle& q_cycle, std::size_t background) {
  const auto& e = inst.source.edge(h);
  const std::size_t q = inst.outer.colors[h];
  Cycle c(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) c[i] = inst.vertex(e[i], inst.replace(background, q, q_cycle[i]));
  return c;
}

/// Visits every canonical cycle once (backgrounds with coordinate q zeroed).
/// visit(h, gadget cycle, background, cycle) returns false to stop.
template <typename Visit>
void for_each_canonical_cycle(const LabelingInstance& inst, Visit&& visit) {
  const auto gadget_cycles = colorful_cycles(inst.gadget);
  for (std::size_t h = 0; h < inst.source.edge_count(); ++h) {
    const std::size_t q = inst.outer.colors[h];
    for (std::size_t b = 0; b < inst.backgrounds; ++b) {
      if (inst.coordinate(b, q) != 0) continue;
      for (const auto& gc : gadget_cycles)
        if (!visit(h, gc, b, canonical_cycle(inst, h, gc, b))) return;
    }
  }
}

/// Averaging search for a canonical cycle inside `in`: take the hyperedge
/// contained in the most slices of `in`, then the background y with the
/// largest fibre X along the hyperedge's outer coordinate, then a colorful
/// cycle in X.
inline std::optional<Cycle> labeling_soundness_search(const LabelingInstance& inst, const std::vector<bool>& in) {
  std::size_t best_h = kInfinity, best_count = 0;
  for (std::size_t h = 0; h < inst.source.edge_count(); ++h) {
    std::size_t count = 0;
    for (std::size_t b = 0; b < inst.backgrounds; ++b) {
      bool all = true;
      for (Vertex v : inst.source.edge(h)) all = all && in[inst.vertex(v, b)];
      count += all;
    }
    if (count > best_count) {
      best_count = count;
      best_h = h;
    }
  }
  if (best_h == kInfinity) return std::nullopt;
  const auto& e = inst.source.edge(best_h);
  const std::size_t q = inst.outer.colors[best_h];
  std::map<std::size_t, VertexSet> fibres;  // y (coordinate q zeroed) -> X
  for (std::size_t b = 0; b < inst.backgrounds; ++b) {
    bool all = true;
    for (Vertex v : e) all = all && in[inst.vertex(v, b)];
    if (all) fibres[inst.replace(b, q, 0)].push_back(inst.coordinate(b, q));
  }
  const VertexSet* best_x = nullptr;
  std::size_t best_y = 0;
  for (const auto& [y, xs] : fibres)
    if (!best_x || xs.size() > best_x->size()) {
      best_x = &xs;
      best_y = y;
    }
  auto gc = find_colorful_cycle(inst.gadget, *best_x);
  if (!gc) return std::nullopt;
  Cycle c = canonical_cycle(inst, best_h, *gc, best_y);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!in[c[i]] || !inst.graph.has_edge(c[i], c[(i + 1) % c.size()]))
      throw std::logic_error("soundness search produced an invalid canonical cycle");
  return c;
}

struct LabelingSoundnessOptions {
  double measure = 1.0;  // 2 delta
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

struct LabelingReport {
  std::size_t girth = kInfinity;
  bool girth_ok = false;  // girth >= k
  std::size_t cycles_checked = 0;
  bool projection_ok = true;  // (a)
  std::optional<Cycle> projection_witness;
  bool cover_ok = true;  // (b)
  std::size_t cover_length_limit = 0;
  std::optional<Cycle> cover_witness;
  std::size_t soundness_trials = 0;  // (c)
  std::size_t soundness_hits = 0;
  bool full_set_found = false;
  double soundness_rate() const {
    return soundness_trials ? static_cast<double>(soundness_hits) / static_cast<double>(soundness_trials) : 0.0;
  }
};

inline LabelingReport verify_labeling_lemmas(const LabelingInstance& inst, const VertexSet& cover, std::size_t max_len,
                                             LabelingSoundnessOptions sound = {}, std::size_t cap = 5'000'000) {
  const std::size_t k = inst.gadget.k;
  LabelingReport rep;
  rep.girth = girth(inst.graph);
  rep.girth_ok = rep.girth >= k;
  rep.cover_length_limit = std::min(max_len, inst.kprime);
  const VertexSet c = normalized(cover);

  std::vector<bool> in_f(inst.graph.size(), false);
  for (Vertex v = 0; v < inst.graph.size(); ++v) in_f[v] = contains(c, inst.base_of(v));
  auto hits = [&](const Cycle& cyc) {
    return std::any_of(cyc.begin(), cyc.end(), [&](Vertex v) { return in_f[v]; });
  };
  // Canonical cycles first so a failing cover reports a canonical witness.
  if (rep.cover_length_limit >= k)
    for_each_canonical_cycle(inst, [&](std::size_t, const Cycle&, std::size_t, const Cycle& cyc) {
      if (hits(cyc)) return true;
      rep.cover_ok = false;
      rep.cover_witness = cyc;
      return false;
    });

  for_each_simple_cycle(inst.graph, 2, max_len, [&](const Cycle& cyc) {
    if (++rep.cycles_checked > cap) throw CapacityError("more than " + std::to_string(cap) + " cycles");
    if (cyc.size() >= k && rep.projection_ok) {
      VertexSet proj;
      for (Vertex v : cyc) proj.push_back(inst.base_of(v));
      proj = normalized(std::move(proj));
      bool found = std::any_of(inst.source.edges().begin(), inst.source.edges().end(),
                               [&](const std::vector<Vertex>& e) { return is_subset(normalized(e), proj); });
      if (!found) {
        rep.projection_ok = false;
        rep.projection_witness = cyc;
      }
    }
    if (cyc.size() <= rep.cover_length_limit && rep.cover_ok && !hits(cyc)) {
      rep.cover_ok = false;
      rep.cover_witness = cyc;
    }
    return true;
  });

  const std::size_t N = inst.graph.size();
  rep.full_set_found = labeling_soundness_search(inst, std::vector<bool>(N, true)).has_value();
  const std::size_t size = std::min(N, static_cast<std::size_t>(std::floor(sound.measure * static_cast<double>(N) + 1e-9)));
  for (std::size_t t = 0; t < sound.trials; ++t) {
    Stream rng(sound.seed, {t});
    std::vector<bool> in(N, false);
    for (Vertex v : rng.subset(N, size)) in[v] = true;
    ++rep.soundness_trials;
    rep.soundness_hits += labeling_soundness_search(inst, in).has_value();
  }
  return rep;
}

}  // namespace htrans
