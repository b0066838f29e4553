//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/lp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcmc {
namespace {
  // Tableau rows hold [coefficients | rhs]; the last row is the objective
  // row of reduced costs d_j = c_B B^-1 a_j - c_j for a maximization.
  class Tableau {
  public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
          basis_(rows, 0) {}

    double &at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
    double at(std::size_t r, std::size_t c) const {
      return data_[r * (cols_ + 1) + c];
    }
    double &rhs(std::size_t r) { return at(r, cols_); }
    double rhs(std::size_t r) const { return at(r, cols_); }
    double &cost(std::size_t c) { return at(rows_, c); }
    double cost(std::size_t c) const { return at(rows_, c); }
    double value() const { return at(rows_, cols_); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t> &basis() { return basis_; }

    void pivot(std::size_t pr, std::size_t pc) {
      const double inv = 1.0 / at(pr, pc);
      for (std::size_t c = 0; c <= cols_; ++c)
        at(pr, c) *= inv;
      at(pr, pc) = 1.0;
      for (std::size_t r = 0; r <= rows_; ++r) {
        if (r == pr)
          continue;
        const double factor = at(r, pc);
        if (factor == 0.0)
          continue;
        for (std::size_t c = 0; c <= cols_; ++c)
          at(r, c) -= factor * at(pr, c);
        at(r, pc) = 0.0;
      }
      basis_[pr] = pc;
    }

    // Sets the objective row for max c.x given the current basis.
    void price(const std::vector<double> &c) {
      for (std::size_t j = 0; j <= cols_; ++j)
        cost(j) = j < c.size() ? -c[j] : 0.0;
      for (std::size_t r = 0; r < rows_; ++r) {
        const double cb = basis_[r] < c.size() ? c[basis_[r]] : 0.0;
        if (cb == 0.0)
          continue;
        for (std::size_t j = 0; j <= cols_; ++j)
          cost(j) += cb * at(r, j);
      }
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
    std::vector<std::size_t> basis_;
  };

  enum class Run { Optimal, Unbounded };

  // Bland's rule over columns [0, limit): smallest improving index enters,
  // ties in the ratio test leave by smallest basic index.
  Run run_simplex(Tableau &t, std::size_t limit, std::size_t &pivots,
                  std::size_t &unbounded_col) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (t.cost(j) < -kPivotTolerance) {
          enter = j;
          break;
        }
      if (enter == limit)
        return Run::Optimal;
      std::size_t leave = t.rows();
      double best = 0.0;
      for (std::size_t r = 0; r < t.rows(); ++r) {
        const double a = t.at(r, enter);
        if (a <= kPivotTolerance)
          continue;
        const double ratio = t.rhs(r) / a;
        if (leave == t.rows() || ratio < best - 1e-12 ||
            (std::abs(ratio - best) <= 1e-12 &&
             t.basis()[r] < t.basis()[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == t.rows()) {
        unbounded_col = enter;
        return Run::Unbounded;
      }
      t.pivot(leave, enter);
      ++pivots;
    }
  }
}  // namespace

const char *to_string(LpStatus status) {
  switch (status) {
  case LpStatus::Optimal:
    return "optimal";
  case LpStatus::Unbounded:
    return "unbounded";
  case LpStatus::Infeasible:
    return "infeasible";
  }
  return "unknown";
}

void SimplexProblem::validate() const {
  if (A.size() != b.size())
    throw std::invalid_argument("lp: A has " + std::to_string(A.size()) +
                                " rows but b has " + std::to_string(b.size()));
  if (!relations.empty() && relations.size() != b.size())
    throw std::invalid_argument("lp: relations must match the row count");
  for (const auto &row : A)
    if (row.size() != c.size())
      throw std::invalid_argument("lp: every row of A needs |c| entries");
  auto finite = [](const std::vector<double> &v) {
    for (double x : v)
      if (!std::isfinite(x))
        return false;
    return true;
  };
  if (!finite(c) || !finite(b))
    throw std::invalid_argument("lp: non-finite value in c or b");
  for (const auto &row : A)
    if (!finite(row))
      throw std::invalid_argument("lp: non-finite value in A");
}

SimplexOutcome solve(const SimplexProblem &problem) {
  problem.validate();
  const std::size_t m = problem.b.size();
  const std::size_t n = problem.c.size();
  const double obj_sign = problem.sense == Sense::Maximize ? 1.0 : -1.0;

  // Normalize to max c'.x, A'x <= b' with row signs sigma.
  std::vector<double> sigma(m, 1.0);
  for (std::size_t i = 0; i < m; ++i)
    if (!problem.relations.empty() &&
        problem.relations[i] == Relation::GreaterEqual)
      sigma[i] = -1.0;
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j)
    c[j] = obj_sign * problem.c[j];

  // Rows with b' < 0 are negated (slack coefficient -1) and get an
  // artificial variable.
  std::vector<std::size_t> artificial_row;
  std::vector<double> rho(m, 1.0);
  for (std::size_t i = 0; i < m; ++i)
    if (sigma[i] * problem.b[i] < 0.0) {
      rho[i] = -1.0;
      artificial_row.push_back(i);
    }
  const std::size_t slack0 = n;
  const std::size_t art0 = n + m;
  const std::size_t cols = n + m + artificial_row.size();

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = sigma[i] * rho[i];
    for (std::size_t j = 0; j < n; ++j)
      t.at(i, j) = s * problem.A[i][j];
    t.at(i, slack0 + i) = rho[i];
    t.rhs(i) = s * problem.b[i];
    t.basis()[i] = slack0 + i;
  }
  for (std::size_t k = 0; k < artificial_row.size(); ++k) {
    const std::size_t i = artificial_row[k];
    t.at(i, art0 + k) = 1.0;
    t.basis()[i] = art0 + k;
  }

  SimplexOutcome out;
  std::size_t unbounded_col = 0;
  if (!artificial_row.empty()) {
    // Phase 1: maximize minus the sum of artificials.
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t k = 0; k < artificial_row.size(); ++k)
      phase1[art0 + k] = -1.0;
    t.price(phase1);
    run_simplex(t, cols, out.pivots, unbounded_col);
    if (t.value() < -1e-9) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive degenerate artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < art0)
        continue;
      for (std::size_t j = 0; j < art0; ++j)
        if (std::abs(t.at(r, j)) > kPivotTolerance) {
          t.pivot(r, j);
          ++out.pivots;
          break;
        }
    }
  }

  // Artificial columns never re-enter: phase 2 prices only [0, art0).
  t.price(c);
  const Run run = run_simplex(t, art0, out.pivots, unbounded_col);

  out.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (t.basis()[r] < n)
      out.x[t.basis()[r]] = t.rhs(r);

  if (run == Run::Unbounded) {
    out.status = LpStatus::Unbounded;
    out.ray.assign(n, 0.0);
    if (unbounded_col < n)
      out.ray[unbounded_col] = 1.0;
    for (std::size_t r = 0; r < m; ++r)
      if (t.basis()[r] < n)
        out.ray[t.basis()[r]] = -t.at(r, unbounded_col);
    return out;
  }

  out.status = LpStatus::Optimal;
  out.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    out.objective += problem.c[j] * out.x[j];
  out.y.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    out.y[i] = obj_sign * sigma[i] * t.cost(slack0 + i);
  return out;
}

DualRealization realize_via_dual(const std::vector<std::vector<double>> &A,
                                 double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("realize_via_dual: epsilon must be positive");
  const std::size_t k = A.size();
  const std::size_t m = k == 0 ? 0 : A.front().size();
  for (const auto &row : A)
    if (row.size() != m)
      throw std::invalid_argument("realize_via_dual: ragged constraint matrix");

  SimplexProblem dual;
  dual.c.assign(k, epsilon);
  dual.A.assign(m, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      dual.A[j][i] = A[i][j];
  dual.b.assign(m, 1.0);

  const auto outcome = solve(dual);
  DualRealization out;
  out.pivots = outcome.pivots;
  if (outcome.status == LpStatus::Unbounded) {
    for (std::size_t i = 0; i < k; ++i)
      if (outcome.ray[i] > kPivotTolerance)
        out.certificate.push_back(i);
    return out;
  }
  if (outcome.status != LpStatus::Optimal)
    throw std::logic_error("realize_via_dual: dual with t = 0 feasible "
                           "reported infeasible");
  out.feasible = true;
  out.z = outcome.y;
  for (double &z : out.z)
    z = std::max(z, 0.0);
  out.objective = outcome.objective;
  return out;
}

}  // namespace qcmc
