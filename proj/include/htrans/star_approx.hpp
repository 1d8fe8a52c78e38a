#pragma once

// O(log k)-approximation for k-Star Transversal: delete as few vertices as
// possible so that every remaining vertex has degree <= k-2.
//
// Phase 1 solves a two-round Sherali-Adams relaxation repeatedly, committing
// every vertex with x_v >= 1/alpha until the committed set stops growing.
// Phase 2 turns the residual high-degree vertices into a constrained set
// multicover instance and solves it greedily.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "htrans/graph.hpp"
#include "htrans/lp.hpp"

namespace htrans {

inline constexpr double kAlpha = 10.0;
inline constexpr double kThresholdSlack = 1e-9;

/// A hard-asserted lemma of the algorithm did not hold on this input.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline double harmonic(std::size_t n) {
  double h = 0;
  for (std::size_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

/// Relaxation for graph g. Variable v is x_v; variable n + e is the pair
/// variable of edge e = pairs[e]. Non-adjacent pairs carry no variable.
struct SALP {
  LPProblem lp;
  std::vector<Graph::Edge> pairs;

  std::size_t x(Vertex v) const { return v; }
  std::size_t xp(std::size_t e) const { return lp.var_count - pairs.size() + e; }
};

inline SALP build_sa_lp(const Graph& g, std::size_t k, const VertexSet& committed) {
  if (g.directed()) throw std::invalid_argument("star relaxation expects an undirected graph");
  if (k < 2) throw std::invalid_argument("k-Star needs k >= 2");
  const std::size_t n = g.size();
  SALP out;
  out.pairs = g.edges();
  const std::size_t m = out.pairs.size();
  out.lp = LPProblem::with_variables(n + m);
  LPProblem& lp = out.lp;
  for (Vertex v = 0; v < n; ++v) lp.objective[v] = 1.0;
  for (std::size_t j = 0; j < n + m; ++j) lp.upper[j] = 1.0;

  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident(n);  // (neighbour, pair index)
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = out.pairs[e];
    incident[u].push_back({v, e});
    incident[v].push_back({u, e});
    std::vector<double> row(n + m, 0.0);
    row[out.xp(e)] = 1.0;
    row[u] = -1.0;
    lp.add(row, Relation::less_equal, 0.0);
    row[u] = 0.0;
    row[v] = -1.0;
    lp.add(row, Relation::less_equal, 0.0);
    row[out.xp(e)] = -1.0;
    row[u] = 1.0;
    row[v] = 1.0;
    lp.add(std::move(row), Relation::less_equal, 1.0);
  }
  // sum_{v in N(u)} (x_v - x_uv) >= (Deg(u) - k + 2)(1 - x_u)
  for (Vertex u = 0; u < n; ++u) {
    const double r = static_cast<double>(g.degree(u)) - static_cast<double>(k) + 2.0;
    if (r <= 0) continue;
    std::vector<double> row(n + m, 0.0);
    for (auto [v, e] : incident[u]) {
      row[v] += 1.0;
      row[out.xp(e)] -= 1.0;
    }
    row[u] += r;
    lp.add(std::move(row), Relation::greater_equal, r);
  }
  const VertexSet s = normalized(committed);
  for (Vertex v : s) {
    if (v >= n) throw std::out_of_range("committed vertex out of range");
    lp.lower[v] = 1.0;
  }
  // Pair touching a committed vertex: x_uv = x_other.
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = out.pairs[e];
    const bool su = contains(s, u), sv = contains(s, v);
    if (!su && !sv) continue;
    std::vector<double> row(n + m, 0.0);
    row[out.xp(e)] = 1.0;
    row[su ? v : u] = -1.0;
    lp.add(std::move(row), Relation::equal, 0.0);
  }
  return out;
}

struct RoundingStep {
  std::size_t committed = 0;  // |S| going into this solve
  double objective = 0;
  double frac = 0;            // objective - |S|
  std::size_t pivots = 0;
};

struct SAState {
  VertexSet S;
  std::vector<double> x;          // singleton values from the last solve
  std::vector<double> xp;         // pair values, indexed like `pairs`
  std::vector<Graph::Edge> pairs;
  double frac0 = 0;
  double frac = 0;                // Frac of the last solve
  std::vector<RoundingStep> log;
  std::size_t residual_max_degree = 0;
};

/// Max degree of g - removed, measured on the surviving vertices.
inline std::size_t residual_max_degree(const Graph& g, const VertexSet& removed) {
  VertexSet r = normalized(removed);
  std::size_t d = 0;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (contains(r, u)) continue;
    std::size_t c = 0;
    for (Vertex v : g.neighbors(u)) c += !contains(r, v);
    d = std::max(d, c);
  }
  return d;
}

inline SAState iterative_rounding(const Graph& g, std::size_t k, bool enforce = true) {
  SAState st;
  for (;;) {
    SALP sa = build_sa_lp(g, k, st.S);
    LPSolution sol = solve(sa.lp);
    if (sol.status != LPStatus::optimal)
      throw NumericError(std::string("star relaxation not optimal: ") + to_string(sol.status));
    RoundingStep step{st.S.size(), sol.objective, sol.objective - static_cast<double>(st.S.size()),
                      sol.iterations};
    st.log.push_back(step);
    if (st.log.size() == 1) st.frac0 = step.frac;
    st.frac = step.frac;
    st.pairs = sa.pairs;
    st.x.assign(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(g.size()));
    st.xp.assign(sol.values.begin() + static_cast<std::ptrdiff_t>(g.size()), sol.values.end());
    VertexSet next = st.S;
    for (Vertex v = 0; v < g.size(); ++v)
      if (st.x[v] >= 1.0 / kAlpha - kThresholdSlack) next.push_back(v);
    next = normalized(next);
    if (next.size() == st.S.size()) break;
    st.S = std::move(next);
  }
  st.residual_max_degree = residual_max_degree(g, st.S);
  if (enforce) {
    if (static_cast<double>(st.S.size()) > kAlpha * st.frac0 + 1e-6)
      throw LemmaViolation("|S| = " + std::to_string(st.S.size()) + " exceeds alpha * Frac0 = " +
                           std::to_string(kAlpha * st.frac0));
    if (st.residual_max_degree > 2 * k)
      throw LemmaViolation("residual max degree " + std::to_string(st.residual_max_degree) +
                           " exceeds 2k = " + std::to_string(2 * k));
  }
  return st;
}

/// Constrained set multicover: cover each u in `universe` by `requirement[u]`
/// distinct candidate sets, each set usable once.
struct MulticoverInstance {
  VertexSet universe;
  std::vector<std::size_t> requirement;  // indexed by vertex; 0 outside the universe
  std::vector<VertexSet> sets;           // sets[v] = N'(v) ∩ U; empty for removed v
};

inline MulticoverInstance build_multicover(const Graph& g, const VertexSet& committed, std::size_t k) {
  const VertexSet s = normalized(committed);
  const std::size_t n = g.size();
  MulticoverInstance inst;
  inst.requirement.assign(n, 0);
  inst.sets.assign(n, {});
  std::vector<std::size_t> deg(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (contains(s, u)) continue;
    for (Vertex v : g.neighbors(u)) deg[u] += !contains(s, v);
    if (deg[u] + 2 >= k + 1) {  // Deg'(u) >= k - 1
      inst.universe.push_back(u);
      inst.requirement[u] = deg[u] + 2 - k;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (contains(s, v)) continue;
    for (Vertex u : g.neighbors(v))
      if (inst.requirement[u] > 0) inst.sets[v].push_back(u);
  }
  return inst;
}

/// Greedy: repeatedly take the unused set covering the most still-needy
/// elements (lowest id on ties), recounting after every pick.
inline VertexSet greedy_multicover(const MulticoverInstance& inst) {
  std::vector<std::size_t> need = inst.requirement;
  std::size_t open = 0;
  for (Vertex u : inst.universe) open += need[u] > 0;
  std::vector<bool> used(inst.sets.size(), false);
  VertexSet chosen;
  while (open > 0) {
    Vertex best = kInfinity;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < inst.sets.size(); ++v) {
      if (used[v]) continue;
      std::size_t gain = 0;
      for (Vertex u : inst.sets[v]) gain += need[u] > 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best == kInfinity) throw std::logic_error("multicover instance is infeasible");
    used[best] = true;
    chosen.push_back(best);
    for (Vertex u : inst.sets[best])
      if (need[u] > 0 && --need[u] == 0) --open;
  }
  return normalized(chosen);
}

/// LP of the multicover instance over all vertices of the graph: minimize
/// sum y_v subject to sum_{v : u in C_v} y_v >= r_u, 0 <= y <= 1.
inline LPProblem multicover_lp(const MulticoverInstance& inst) {
  const std::size_t n = inst.sets.size();
  LPProblem lp = LPProblem::with_variables(n);
  for (std::size_t v = 0; v < n; ++v) {
    lp.objective[v] = 1.0;
    lp.upper[v] = 1.0;
  }
  for (Vertex u : inst.universe) {
    std::vector<double> row(n, 0.0);
    for (Vertex v = 0; v < n; ++v)
      if (contains(inst.sets[v], u)) row[v] = 1.0;
    lp.add(std::move(row), Relation::greater_equal, static_cast<double>(inst.requirement[u]));
  }
  return lp;
}

struct StarCertificate {
  std::size_t k = 0;
  double frac0 = 0;
  double frac_last = 0;
  std::size_t iterations = 0;
  std::size_t s_size = 0;
  std::size_t f_size = 0;
  std::size_t total = 0;
  double ratio_bound = 0;              // alpha + 2 H_{2k}
  std::size_t phase1_max_degree = 0;   // after removing S
  std::size_t residual_max_degree = 0; // after removing S and F
  double doubled_x_violation = 0;      // multicover LP residual of y = 2x

  bool s_bound_ok() const { return static_cast<double>(s_size) <= kAlpha * frac0 + 1e-6; }
  bool phase1_degree_ok() const { return phase1_max_degree <= 2 * k; }
  bool doubled_x_ok() const { return doubled_x_violation <= 1e-6; }
  bool f_bound_ok() const { return static_cast<double>(f_size) <= 2 * frac_last * harmonic(2 * k) + 1e-6; }
  bool total_bound_ok() const { return static_cast<double>(total) <= ratio_bound * frac0 + 1e-6; }
  bool valid() const { return k >= 2 && residual_max_degree + 2 <= k; }
};

struct StarResult {
  VertexSet transversal;  // S ∪ F
  VertexSet S;
  VertexSet F;
  StarCertificate certificate;
};

inline StarResult star_transversal(const Graph& g, std::size_t k, bool enforce = true) {
  SAState st = iterative_rounding(g, k, enforce);
  MulticoverInstance inst = build_multicover(g, st.S, k);
  StarResult res;
  res.S = st.S;
  res.F = greedy_multicover(inst);
  res.transversal = res.S;
  res.transversal.insert(res.transversal.end(), res.F.begin(), res.F.end());
  res.transversal = normalized(res.transversal);

  StarCertificate& c = res.certificate;
  c.k = k;
  c.frac0 = st.frac0;
  c.frac_last = st.frac;
  c.iterations = st.log.size();
  c.s_size = res.S.size();
  c.f_size = res.F.size();
  c.total = res.transversal.size();
  c.ratio_bound = kAlpha + 2 * harmonic(2 * k);
  c.phase1_max_degree = st.residual_max_degree;
  c.residual_max_degree = residual_max_degree(g, res.transversal);
  std::vector<double> y(g.size(), 0.0);
  for (Vertex v = 0; v < g.size(); ++v)
    if (!contains(res.S, v)) y[v] = 2 * st.x[v];
  c.doubled_x_violation = check(multicover_lp(inst), y).max();

  if (enforce) {
    if (!c.valid())
      throw LemmaViolation("residual max degree " + std::to_string(c.residual_max_degree) + " exceeds k - 2");
    if (!c.doubled_x_ok())
      throw LemmaViolation("2x violates the multicover LP by " + std::to_string(c.doubled_x_violation));
    if (!c.f_bound_ok())
      throw LemmaViolation("|F| = " + std::to_string(c.f_size) + " exceeds 2 Frac H_2k");
    if (!c.total_bound_ok())
      throw LemmaViolation("|S u F| = " + std::to_string(c.total) + " exceeds ratio bound times Frac0");
  }
  return res;
}

}  // namespace htrans
