#pragma once

// Density verifiers: hypergraph subset density and bipartite density between
// two clouds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "htrans/graph.hpp"
#include "htrans/random.hpp"

namespace htrans {

struct DensityMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  static DensityMode exhaustive() { return {}; }
  static DensityMode sampled(std::uint64_t seed, std::size_t trials) {
    return {Kind::sampled, seed, trials};
  }
};

struct HypergraphDensityReport {
  bool dense = true;
  std::size_t subset_size = 0;     // smallest size with measure >= delta
  double required = 0;             // rho * m
  std::size_t worst_count = 0;     // fewest induced hyperedges seen
  VertexSet worst_subset;
  std::size_t subsets_checked = 0;
  bool exhaustive = true;
};

namespace detail {

inline std::size_t measure_to_size(double measure, std::size_t n) {
  double s = std::ceil(measure * static_cast<double>(n) - 1e-9);
  if (s < 0) s = 0;
  return static_cast<std::size_t>(s);
}

// Calls f(mask) for every n-bit mask with exactly r bits set (Gosper's hack).
template <typename F>
void for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  if (r == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (!f(mask)) return;
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t rr = mask + c;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet s;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) s.push_back(v);
  return s;
}

}  // namespace detail

/// Every vertex subset of measure >= delta must induce >= rho*m hyperedges.
/// Induced counts are monotone under supersets, so only subsets of the
/// minimal admissible size are inspected.
inline HypergraphDensityReport check_hypergraph_density(const Hypergraph& p, double delta,
                                                        double rho, DensityMode mode) {
  const std::size_t n = p.vertex_count();
  HypergraphDensityReport rep;
  rep.subset_size = std::min(n, detail::measure_to_size(delta, n));
  rep.required = rho * static_cast<double>(p.edge_count());
  rep.worst_count = kInfinity;
  rep.exhaustive = mode.kind == DensityMode::Kind::exhaustive;

  std::vector<std::uint64_t> edge_masks;
  if (n <= 64)
    for (const auto& e : p.edges()) {
      std::uint64_t m = 0;
      for (Vertex v : e) m |= std::uint64_t{1} << v;
      edge_masks.push_back(m);
    }
  auto induced = [&](const std::vector<bool>& in) {
    std::size_t c = 0;
    for (const auto& e : p.edges()) {
      bool all = true;
      for (Vertex v : e) all = all && in[v];
      c += all;
    }
    return c;
  };
  auto record = [&](std::size_t count, VertexSet subset) {
    ++rep.subsets_checked;
    if (count < rep.worst_count) {
      rep.worst_count = count;
      rep.worst_subset = std::move(subset);
    }
    if (static_cast<double>(count) < rep.required - 1e-12) rep.dense = false;
  };

  if (rep.exhaustive) {
    if (n > 24) throw std::invalid_argument("exhaustive density check limited to n <= 24");
    detail::for_each_combination(n, rep.subset_size, [&](std::uint64_t mask) {
      std::size_t c = 0;
      for (std::uint64_t em : edge_masks) c += (em & mask) == em;
      record(c, detail::mask_to_set(mask));
      return true;
    });
  } else {
    Stream rng(mode.seed, {0x64656e73ULL});
    for (std::size_t t = 0; t < mode.trials; ++t) {
      VertexSet s = rng.subset(n, rep.subset_size);
      std::vector<bool> in(n, false);
      for (Vertex v : s) in[v] = true;
      record(induced(in), std::move(s));
    }
  }
  if (rep.worst_count == kInfinity) rep.worst_count = 0;
  return rep;
}

struct BipartiteDensityReport {
  bool dense = true;
  std::size_t side_size = 0;    // |X| = |Y| = ceil(eps * B)
  std::size_t total_edges = 0;  // edges between the clouds
  double required = 0;          // eps^2 / 8 * total_edges
  std::size_t worst_count = 0;
  VertexSet worst_x, worst_y;
  bool exhaustive = true;
};

/// (eps, eps^2/8)-bipartite density between two equal-size clouds. For a
/// fixed X the worst Y is the ceil(eps*B) vertices of cloudB with fewest
/// neighbours in X, so the exhaustive scan only enumerates X.
inline BipartiteDensityReport check_bipartite_density(const Graph& g, const VertexSet& cloud_a,
                                                      const VertexSet& cloud_b, double eps,
                                                      DensityMode mode) {
  if (cloud_a.size() != cloud_b.size())
    throw std::invalid_argument("bipartite density needs equal-size clouds");
  if (intersects(normalized(cloud_a), normalized(cloud_b)))
    throw std::invalid_argument("bipartite density needs disjoint clouds");
  const std::size_t b = cloud_a.size();
  BipartiteDensityReport rep;
  rep.side_size = std::min(b, detail::measure_to_size(eps, b));
  for (Vertex u : cloud_a)
    for (Vertex v : cloud_b) rep.total_edges += g.has_edge(u, v) || g.has_edge(v, u);
  rep.required = eps * eps / 8.0 * static_cast<double>(rep.total_edges);
  rep.worst_count = kInfinity;
  const bool exhaustive = mode.kind == DensityMode::Kind::exhaustive && b <= 12;
  rep.exhaustive = exhaustive;
  if (rep.total_edges == 0) {
    rep.worst_count = 0;
    return rep;  // vacuous
  }

  auto evaluate = [&](const VertexSet& x_local) {
    std::vector<std::pair<std::size_t, Vertex>> counts;
    for (std::size_t j = 0; j < b; ++j) {
      std::size_t c = 0;
      for (std::size_t i : x_local) c += g.has_edge(cloud_a[i], cloud_b[j]) || g.has_edge(cloud_b[j], cloud_a[i]);
      counts.emplace_back(c, j);
    }
    std::sort(counts.begin(), counts.end());
    std::size_t total = 0;
    VertexSet y;
    for (std::size_t t = 0; t < rep.side_size; ++t) {
      total += counts[t].first;
      y.push_back(cloud_b[counts[t].second]);
    }
    if (total < rep.worst_count) {
      rep.worst_count = total;
      rep.worst_x.clear();
      for (std::size_t i : x_local) rep.worst_x.push_back(cloud_a[i]);
      rep.worst_y = normalized(y);
    }
    if (static_cast<double>(total) < rep.required - 1e-12) rep.dense = false;
  };

  if (exhaustive) {
    detail::for_each_combination(b, rep.side_size, [&](std::uint64_t mask) {
      evaluate(detail::mask_to_set(mask));
      return true;
    });
  } else {
    // Large clouds fall back to sampling even when exhaustive was requested.
    const std::size_t trials = mode.trials ? mode.trials : 1000;
    Stream rng(mode.seed, {0x62697061ULL});
    for (std::size_t t = 0; t < trials; ++t) evaluate(rng.subset(b, rep.side_size));
  }
  return rep;
}

}  // namespace htrans
