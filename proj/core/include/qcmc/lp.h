//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_LP_H_
#define QCMC_LP_H_

#include <cstddef>
#include <string>
#include <vector>

namespace qcmc {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEqual, GreaterEqual };
enum class LpStatus { Optimal, Unbounded, Infeasible };

const char *to_string(LpStatus status);

// optimize c.x subject to A x (<= | >=) b and x >= 0.
struct SimplexProblem {
  std::vector<double> c;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  Sense sense = Sense::Maximize;
  std::vector<Relation> relations;  // empty means all LessEqual

  /// Throws std::invalid_argument on shape mismatch or non-finite data.
  void validate() const;
};

struct SimplexOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  // Dual prices with the convention objective = b.y; y >= 0 on rows whose
  // direction matches the sense (<= for max, >= for min).
  std::vector<double> y;
  double objective = 0.0;
  std::vector<double> ray;  // improving direction when Unbounded
  std::size_t pivots = 0;
};

inline constexpr double kPivotTolerance = 1e-9;

/// Dense tableau simplex with Bland's rule. Rows with a negative right-hand
/// side after normalization trigger a phase-1 on artificial variables.
SimplexOutcome solve(const SimplexProblem &problem);

struct DualRealization {
  bool feasible = false;
  std::vector<double> z;         // minimizer of sum z, A z >= eps, z >= 0
  double objective = 0.0;        // sum z = eps * sum t
  std::vector<std::size_t> certificate;  // rows in the dual ray when infeasible
  std::size_t pivots = 0;
};

/// Solves max eps * sum t subject to A^T t <= 1, t >= 0 (t = 0 is feasible)
/// and reads z from the reduced costs of the slack columns of the final
/// tableau. An unbounded dual certifies that A z >= eps has no solution.
DualRealization realize_via_dual(const std::vector<std::vector<double>> &A,
                                 double epsilon);

}  // namespace qcmc

#endif  // QCMC_LP_H_
