#pragma once

// Random-matching reduction from k-uniform hypergraph vertex cover to
// H-Transversal. Every source vertex v becomes a cloud {v} x [B]; every
// hyperedge receives a*B canonical copies of H placed on independently and
// uniformly drawn labels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "htrans/copies.hpp"
#include "htrans/graph.hpp"
#include "htrans/random.hpp"
#include "htrans/structure.hpp"

namespace htrans {

struct ReductionParams {
  std::size_t B = 2;
  std::size_t a = 1;
  std::uint64_t seed = 0;
  PatternGraph pattern;
  std::optional<std::size_t> kprime;  // cycle-length variant
  bool directed = false;              // directed host, cycle patterns only
  bool allow_non_two_connected = false;

  void validate() const {
    if (B < 1) throw std::invalid_argument("B must be >= 1");
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    if (pattern.k() == 0) throw std::invalid_argument("pattern is empty");
    if (directed && pattern.kind() != PatternKind::cycle)
      throw std::invalid_argument("directed reductions need a cycle pattern");
    if (kprime && pattern.kind() != PatternKind::cycle)
      throw std::invalid_argument("kprime applies to cycle patterns only");
    if (kprime && *kprime < pattern.k()) throw std::invalid_argument("kprime must be >= k");
  }
};

struct CanonicalCopy {
  std::size_t hyperedge = 0;
  std::size_t repetition = 0;
  std::vector<Vertex> vertices;  // position i lies in the cloud of hyperedge vertex i
};

struct ReductionOutput {
  Graph graph;
  Hypergraph source;
  ReductionParams params;
  std::vector<CanonicalCopy> canonical;  // a*B entries per hyperedge, grouped by hyperedge
  std::vector<std::string> warnings;

  Vertex vertex(Vertex base, std::size_t label) const { return base * params.B + label; }
  std::pair<Vertex, std::size_t> cloud_of(Vertex v) const { return {v / params.B, v % params.B}; }
  VertexSet cloud(Vertex base) const {
    VertexSet c(params.B);
    for (std::size_t l = 0; l < params.B; ++l) c[l] = vertex(base, l);
    return c;
  }
  std::size_t copies_per_edge() const { return params.a * params.B; }

  /// Canonical vertex sets, sorted, for set-identity lookups.
  std::set<VertexSet> canonical_sets() const {
    std::set<VertexSet> s;
    for (const auto& c : canonical) s.insert(normalized(c.vertices));
    return s;
  }
};

inline ReductionOutput build_random_matching_instance(const Hypergraph& p, const ReductionParams& params) {
  params.validate();
  if (p.uniformity() != params.pattern.k())
    throw std::invalid_argument("hypergraph uniformity " + std::to_string(p.uniformity()) +
                                " does not match pattern size " + std::to_string(params.pattern.k()));
  ReductionOutput out;
  out.params = params;
  out.source = p;
  if (!params.pattern.two_connected()) {
    if (!params.allow_non_two_connected)
      throw std::invalid_argument("pattern " + params.pattern.spec() + " is not 2-connected");
    out.warnings.push_back("pattern " + params.pattern.spec() + " is not 2-connected");
  }
  const std::size_t B = params.B, k = params.pattern.k();
  out.graph = Graph(p.vertex_count() * B, params.directed);
  const auto arcs = params.pattern.arcs(params.directed);
  out.canonical.reserve(p.edge_count() * params.a * B);
  for (std::size_t h = 0; h < p.edge_count(); ++h) {
    const auto& e = p.edge(h);
    Stream rng(params.seed, {h});
    for (std::size_t r = 0; r < params.a * B; ++r) {
      CanonicalCopy c{h, r, std::vector<Vertex>(k)};
      for (std::size_t i = 0; i < k; ++i) c.vertices[i] = e[i] * B + rng.below(B);
      for (const auto& [i, j] : arcs) out.graph.add_edge(c.vertices[i], c.vertices[j]);
      out.canonical.push_back(std::move(c));
    }
  }
  return out;
}

/// Loose sufficient cloud size from the completeness analysis,
/// 4 (a d k)^{2k^2} / eps. Reported, never enforced.
inline long double completeness_cloud_bound(std::size_t a, std::size_t d, std::size_t k, double eps) {
  long double base = static_cast<long double>(a) * d * k;
  return 4.0L * std::pow(base, 2.0L * k * k) / eps;
}

struct CompletenessResult {
  VertexSet F;
  std::size_t base_size = 0;  // |cover x [B]|
  std::size_t extras = 0;     // one per surviving copy not already hit
};

namespace detail {

// Adds the smallest vertex of every listed set not yet hit by F.
inline std::size_t hit_remaining(VertexSet& F, const std::vector<VertexSet>& sets) {
  std::vector<bool> in(F.empty() ? 0 : F.back() + 1, false);
  auto mark = [&](Vertex v) {
    if (v >= in.size()) in.resize(v + 1, false);
    in[v] = true;
  };
  for (Vertex v : F) mark(v);
  std::size_t added = 0;
  for (const auto& s : sets) {
    bool hit = false;
    for (Vertex v : s) hit = hit || (v < in.size() && in[v]);
    if (hit) continue;
    Vertex victim = *std::min_element(s.begin(), s.end());
    mark(victim);
    F.push_back(victim);
    ++added;
  }
  F = normalized(std::move(F));
  return added;
}

inline VertexSet cover_clouds(const ReductionOutput& out, const VertexSet& cover) {
  VertexSet F;
  for (Vertex v : normalized(cover)) {
    if (v >= out.source.vertex_count()) throw std::out_of_range("cover vertex out of range");
    for (std::size_t l = 0; l < out.params.B; ++l) F.push_back(out.vertex(v, l));
  }
  return normalized(F);
}

}  // namespace detail

/// cover x [B] plus one vertex from each copy surviving it. Throws when the
/// cover is not a vertex cover; asserts the remainder is copy free.
inline CompletenessResult completeness_transversal(const ReductionOutput& out, const VertexSet& cover) {
  if (!out.source.is_vertex_cover(cover)) throw std::invalid_argument("cover is not a vertex cover");
  CompletenessResult res;
  res.F = detail::cover_clouds(out, cover);
  res.base_size = res.F.size();
  auto survivors = copies_avoiding(out.graph, out.params.pattern, res.F, std::nullopt, true);
  res.extras = detail::hit_remaining(res.F, survivors.copies);
  if (!copies_avoiding(out.graph, out.params.pattern, res.F, std::size_t{1}).copies.empty())
    throw std::logic_error("completeness transversal left a copy");
  return res;
}

struct NoncanonicalReport {
  std::size_t count = 0;
  std::size_t total_copies = 0;
  std::vector<VertexSet> samples;  // first few non-canonical copies
};

inline NoncanonicalReport count_noncanonical(const ReductionOutput& out,
                                             std::optional<std::size_t> cap = std::nullopt,
                                             std::size_t max_samples = 10) {
  auto canon = out.canonical_sets();
  auto all = enumerate_copies(out.graph, out.params.pattern, cap, true);
  NoncanonicalReport rep;
  rep.total_copies = all.copies.size();
  for (const auto& c : all.copies)
    if (!canon.count(c)) {
      ++rep.count;
      if (rep.samples.size() < max_samples) rep.samples.push_back(c);
    }
  return rep;
}

struct SoundnessReport {
  std::size_t trials = 0;
  std::size_t hits = 0;
  std::size_t subset_size = 0;
  std::vector<std::size_t> witness_edge;  // per trial; kInfinity when missed
  double rate() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
};

/// Draws `trials` uniform vertex subsets of the given measure and checks
/// each for a fully contained canonical copy. Hyperedges are searched in
/// decreasing order of their worst cloud fraction inside the subset.
inline SoundnessReport soundness_probe(const ReductionOutput& out, double measure, std::size_t trials,
                                       std::uint64_t seed) {
  if (!(measure > 0 && measure <= 1)) throw std::invalid_argument("measure must lie in (0, 1]");
  const std::size_t N = out.graph.size(), B = out.params.B, per = out.copies_per_edge();
  SoundnessReport rep;
  rep.trials = trials;
  rep.subset_size = std::min(N, static_cast<std::size_t>(std::floor(measure * static_cast<double>(N) + 1e-9)));
  for (std::size_t t = 0; t < trials; ++t) {
    Stream rng(seed, {t});
    std::vector<bool> in(N, false);
    for (Vertex v : rng.subset(N, rep.subset_size)) in[v] = true;
    std::vector<std::size_t> per_cloud(out.source.vertex_count(), 0);
    for (Vertex v = 0; v < N; ++v) per_cloud[v / B] += in[v];
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t h = 0; h < out.source.edge_count(); ++h) {
      std::size_t worst = B;
      for (Vertex v : out.source.edge(h)) worst = std::min(worst, per_cloud[v]);
      order.push_back({-static_cast<double>(worst) / static_cast<double>(B), h});
    }
    std::sort(order.begin(), order.end());
    std::size_t found = kInfinity;
    for (const auto& [neg_mu, h] : order) {
      if (neg_mu == 0.0) break;
      for (std::size_t r = 0; r < per && found == kInfinity; ++r) {
        const auto& c = out.canonical[h * per + r];
        if (std::all_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return in[v]; })) found = h;
      }
      if (found != kInfinity) break;
    }
    rep.witness_edge.push_back(found);
    rep.hits += found != kInfinity;
  }
  return rep;
}

struct ShortCycleReport {
  std::map<std::size_t, std::size_t> noncanonical;  // length -> count
  std::map<std::size_t, std::size_t> total;         // length -> count
  std::vector<Cycle> cycles;                        // the non-canonical ones
};

namespace detail {

inline std::size_t min_cycle_length(const Graph& g) { return g.directed() ? 2 : 3; }

inline ShortCycleReport classify_cycles(const Graph& g, const std::set<VertexSet>& canon, std::size_t max_len,
                                        std::size_t cap) {
  ShortCycleReport rep;
  for (std::size_t len = min_cycle_length(g); len <= max_len; ++len) {
    rep.noncanonical[len] = 0;
    rep.total[len] = 0;
  }
  std::size_t seen = 0;
  for_each_simple_cycle(g, min_cycle_length(g), max_len, [&](const Cycle& c) {
    if (++seen > cap) throw CapacityError("more than " + std::to_string(cap) + " short cycles");
    ++rep.total[c.size()];
    if (!canon.count(normalized(c))) {
      ++rep.noncanonical[c.size()];
      rep.cycles.push_back(c);
    }
    return true;
  });
  return rep;
}

}  // namespace detail

/// Per-length counts of simple cycles (directed when the host is directed)
/// whose vertex set is not a canonical copy, for lengths up to kprime.
inline ShortCycleReport count_short_cycles(const ReductionOutput& out, std::size_t kprime,
                                           std::size_t cap = 5'000'000) {
  if (out.params.pattern.kind() != PatternKind::cycle)
    throw std::invalid_argument("short-cycle counting needs a cycle pattern");
  if (kprime < out.params.pattern.k()) throw std::invalid_argument("kprime must be >= k");
  return detail::classify_cycles(out.graph, out.canonical_sets(), kprime, cap);
}

/// Cycle variant of completeness: cover x [B] plus one vertex from every
/// remaining cycle of length <= kprime. Asserts no such cycle survives.
inline CompletenessResult completeness_short_cycles(const ReductionOutput& out, const VertexSet& cover,
                                                    std::size_t kprime, std::size_t cap = 5'000'000) {
  if (!out.source.is_vertex_cover(cover)) throw std::invalid_argument("cover is not a vertex cover");
  CompletenessResult res;
  res.F = detail::cover_clouds(out, cover);
  res.base_size = res.F.size();
  auto rest = remove_vertices(out.graph, res.F);
  auto cycles = simple_cycles(rest.graph, detail::min_cycle_length(out.graph), kprime, cap);
  std::vector<VertexSet> sets;
  for (auto& c : cycles) {
    VertexSet s;
    for (Vertex v : c) s.push_back(rest.original[v]);
    sets.push_back(normalized(std::move(s)));
  }
  res.extras = detail::hit_remaining(res.F, sets);
  auto after = remove_vertices(out.graph, res.F);
  bool any = false;
  for_each_simple_cycle(after.graph, detail::min_cycle_length(out.graph), kprime, [&](const Cycle&) {
    any = true;
    return false;
  });
  if (any) throw std::logic_error("short-cycle transversal left a cycle");
  return res;
}

}  // namespace htrans
