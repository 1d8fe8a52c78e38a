#pragma once

// Dense two-phase primal simplex for small linear programs.
//
//   minimize    c^T x
//   subject to  a_i^T x (<=, >=, =) b_i
//               lower <= x <= upper
//
// Bland's rule (lowest eligible index enters, lowest basic index leaves on
// ratio ties) makes the pivot sequence deterministic and cycle free.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "htrans/graph.hpp"

namespace htrans {

enum class Relation { less_equal, greater_equal, equal };

struct LPConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::greater_equal;
  double rhs = 0;
};

struct LPProblem {
  std::size_t var_count = 0;
  std::vector<double> objective;
  std::vector<LPConstraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;

  /// n variables, zero objective, bounds [0, +inf).
  static LPProblem with_variables(std::size_t n) {
    LPProblem p;
    p.var_count = n;
    p.objective.assign(n, 0.0);
    p.lower.assign(n, 0.0);
    p.upper.assign(n, std::numeric_limits<double>::infinity());
    return p;
  }

  void add(std::vector<double> coefficients, Relation rel, double rhs) {
    if (coefficients.size() != var_count)
      throw std::invalid_argument("constraint width does not match var_count");
    constraints.push_back({std::move(coefficients), rel, rhs});
  }

  void validate() const {
    if (objective.size() != var_count || lower.size() != var_count || upper.size() != var_count)
      throw std::invalid_argument("LP vectors must have var_count entries");
    for (const auto& c : constraints)
      if (c.coefficients.size() != var_count)
        throw std::invalid_argument("constraint width does not match var_count");
    for (std::size_t j = 0; j < var_count; ++j)
      if (lower[j] > upper[j]) throw std::invalid_argument("bound lo > hi for variable " + std::to_string(j));
  }
};

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  std::vector<double> values;
  double objective = 0;
  std::size_t iterations = 0;
};

/// Largest violation per constraint class for a candidate point.
struct ResidualReport {
  double bounds = 0;
  double less_equal = 0;
  double greater_equal = 0;
  double equal = 0;
  std::size_t worst_constraint = kInfinity;  // index of the worst row, if any

  double max() const { return std::max({bounds, less_equal, greater_equal, equal}); }
};

inline ResidualReport check(const LPProblem& p, const std::vector<double>& x) {
  if (x.size() != p.var_count) throw std::invalid_argument("candidate has wrong length");
  ResidualReport r;
  for (std::size_t j = 0; j < p.var_count; ++j)
    r.bounds = std::max({r.bounds, p.lower[j] - x[j], x[j] - p.upper[j]});
  double worst = 0;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    double lhs = 0;
    for (std::size_t j = 0; j < p.var_count; ++j) lhs += c.coefficients[j] * x[j];
    double v = 0;
    switch (c.relation) {
      case Relation::less_equal: v = lhs - c.rhs; r.less_equal = std::max(r.less_equal, v); break;
      case Relation::greater_equal: v = c.rhs - lhs; r.greater_equal = std::max(r.greater_equal, v); break;
      case Relation::equal: v = std::abs(lhs - c.rhs); r.equal = std::max(r.equal, v); break;
    }
    if (v > worst) {
      worst = v;
      r.worst_constraint = i;
    }
  }
  return r;
}

/// Tabular text dump: one line per row, `obj`, `c<i>` and `bnd` prefixes.
inline std::string to_text(const LPProblem& p) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "lp " << p.var_count << ' ' << p.constraints.size() << '\n';
  os << "obj";
  for (double c : p.objective) os << '\t' << c;
  os << '\n';
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    os << 'c' << i;
    for (double a : c.coefficients) os << '\t' << a;
    os << '\t' << (c.relation == Relation::less_equal ? "<=" : c.relation == Relation::greater_equal ? ">=" : "=")
       << '\t' << c.rhs << '\n';
  }
  for (std::size_t j = 0; j < p.var_count; ++j) os << "bnd\t" << j << '\t' << p.lower[j] << '\t' << p.upper[j] << '\n';
  return os.str();
}

struct SimplexOptions {
  double feasibility_tol = 1e-7;
  double pivot_tol = 1e-9;
  double residual_limit = 1e-5;
  std::size_t max_iterations = 0;  // 0: automatic
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs holds minus the objective.
  double& cost(std::size_t c) { return at(rows_, c); }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = cols_ + 1;
    double* prow = &a_[pr * w];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < w; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &a_[r * w];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < w; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
};

// Column map from original variables to nonnegative standard-form columns.
struct ColumnMap {
  std::size_t var;
  double sign;
};

}  // namespace detail

inline LPSolution solve(const LPProblem& p, SimplexOptions opts = {}) {
  p.validate();
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t n = p.var_count;

  // x_j = offset_j + sign * y (one column) or y+ - y- (two columns).
  std::vector<detail::ColumnMap> columns;
  std::vector<double> offset(n, 0.0);
  struct Row { std::vector<double> a; Relation rel; double b; };
  std::vector<Row> rows;
  std::vector<std::vector<std::size_t>> columns_of(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(p.lower[j])) {
      offset[j] = p.lower[j];
      columns_of[j].push_back(columns.size());
      columns.push_back({j, 1.0});
    } else if (std::isfinite(p.upper[j])) {
      offset[j] = p.upper[j];
      columns_of[j].push_back(columns.size());
      columns.push_back({j, -1.0});
    } else {
      columns_of[j].push_back(columns.size());
      columns.push_back({j, 1.0});
      columns_of[j].push_back(columns.size());
      columns.push_back({j, -1.0});
    }
  }
  const std::size_t ny = columns.size();
  auto translate = [&](const std::vector<double>& coeffs, double rhs) {
    Row r{std::vector<double>(ny, 0.0), Relation::equal, rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (coeffs[j] == 0.0) continue;
      r.b -= coeffs[j] * offset[j];
      for (std::size_t c : columns_of[j]) r.a[c] += coeffs[j] * columns[c].sign;
    }
    return r;
  };
  for (const auto& c : p.constraints) {
    Row r = translate(c.coefficients, c.rhs);
    r.rel = c.relation;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::isfinite(p.lower[j]) && std::isfinite(p.upper[j])) {
      Row r{std::vector<double>(ny, 0.0), Relation::less_equal, p.upper[j] - p.lower[j]};
      r.a[columns_of[j][0]] = 1.0;
      rows.push_back(std::move(r));
    }
  for (auto& r : rows)
    if (r.b < 0) {
      for (double& v : r.a) v = -v;
      r.b = -r.b;
      if (r.rel == Relation::less_equal) r.rel = Relation::greater_equal;
      else if (r.rel == Relation::greater_equal) r.rel = Relation::less_equal;
    }

  const std::size_t m = rows.size();
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++n_slack;
    if (r.rel != Relation::less_equal) ++n_art;
  }
  const std::size_t slack0 = ny, art0 = ny + n_slack, total = ny + n_slack + n_art;
  detail::Tableau t(m, total);
  std::vector<std::size_t> basis(m);
  {
    std::size_t s = slack0, a = art0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < ny; ++c) t.at(i, c) = rows[i].a[c];
      t.rhs(i) = rows[i].b;
      if (rows[i].rel == Relation::less_equal) {
        t.at(i, s) = 1.0;
        basis[i] = s++;
      } else {
        if (rows[i].rel == Relation::greater_equal) t.at(i, s++) = -1.0;
        t.at(i, a) = 1.0;
        basis[i] = a++;
      }
    }
  }

  LPSolution sol;
  const std::size_t max_iter = opts.max_iterations ? opts.max_iterations : 50 * (m + total) + 1000;

  // Runs Bland-rule pivots on the current cost row; columns >= limit never
  // enter. Returns false when unbounded.
  auto run = [&](std::size_t limit) {
    for (;;) {
      std::size_t enter = kInfinity;
      for (std::size_t c = 0; c < limit; ++c)
        if (t.cost(c) < -opts.pivot_tol) {
          enter = c;
          break;
        }
      if (enter == kInfinity) return true;
      std::size_t leave = kInfinity;
      double best = inf;
      for (std::size_t i = 0; i < m; ++i) {
        double a = t.at(i, enter);
        if (a <= opts.pivot_tol) continue;
        double ratio = t.rhs(i) / a;
        bool tie = leave != kInfinity && ratio <= best + 1e-12 && ratio >= best - 1e-12;
        if (leave == kInfinity || ratio < best - 1e-12 || (tie && basis[i] < basis[leave])) {
          if (!tie) best = ratio;
          leave = i;
        }
      }
      if (leave == kInfinity) return false;
      t.pivot(leave, enter);
      basis[leave] = enter;
      if (++sol.iterations > max_iter) throw NumericError("simplex iteration limit exceeded");
    }
  };

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    for (std::size_t c = 0; c <= total; ++c) t.at(m, c) = 0.0;
    for (std::size_t c = art0; c < total; ++c) t.cost(c) = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= art0)
        for (std::size_t c = 0; c <= total; ++c) t.at(m, c) -= t.at(i, c);
    run(total);
    if (-t.rhs(m) > opts.feasibility_tol) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < art0) continue;
      for (std::size_t c = 0; c < art0; ++c)
        if (std::abs(t.at(i, c)) > opts.pivot_tol) {
          t.pivot(i, c);
          basis[i] = c;
          break;
        }
    }
  }

  // Phase 2: original objective in y-space.
  std::vector<double> cy(total, 0.0);
  for (std::size_t c = 0; c < ny; ++c) cy[c] = p.objective[columns[c].var] * columns[c].sign;
  for (std::size_t c = 0; c <= total; ++c) t.at(m, c) = c < total ? cy[c] : 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double cb = cy[basis[i]];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= total; ++c) t.at(m, c) -= cb * t.at(i, c);
  }
  if (!run(art0)) {
    sol.status = LPStatus::unbounded;
    return sol;
  }

  std::vector<double> y(total, 0.0);
  for (std::size_t i = 0; i < m; ++i) y[basis[i]] = std::max(0.0, t.rhs(i));
  sol.values = offset;
  for (std::size_t c = 0; c < ny; ++c) sol.values[columns[c].var] += columns[c].sign * y[c];
  for (std::size_t j = 0; j < n; ++j) {
    double& v = sol.values[j];
    if (v < p.lower[j] && v > p.lower[j] - 1e-9) v = p.lower[j];
    if (v > p.upper[j] && v < p.upper[j] + 1e-9) v = p.upper[j];
  }
  sol.objective = 0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += p.objective[j] * sol.values[j];
  sol.status = LPStatus::optimal;
  if (check(p, sol.values).max() > opts.residual_limit)
    throw NumericError("simplex residual above limit: " + std::to_string(check(p, sol.values).max()));
  return sol;
}

}  // namespace htrans
