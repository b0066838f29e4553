//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_CHIROTOPE_H_
#define QCMC_CHIROTOPE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcmc/graph.h"

namespace qcmc {

inline constexpr double kChiZeroTolerance = 1e-12;

/// Sign of the determinant spanned by the tuple. A tuple of dim + 1 points
/// uses homogeneous coordinates, i.e. det(x_b - x_a, x_c - x_a, ...); a tuple
/// of dim points uses the points directly. |det| < 1e-12 gives 0.
int chi_of_points(const Conformation &conf, std::span<const std::size_t> tuple,
                  int dim);

/// Signed volume behind chi_of_points.
double chi_determinant(const Conformation &conf,
                       std::span<const std::size_t> tuple, int dim);

// Partially defined alternating sign map on r-tuples (r <= 4). Entries are
// stored under their sorted tuple; queries on permutations pick up the
// permutation sign.
class PartialChirotope {
public:
  struct Entry {
    std::array<std::size_t, 4> ids{};  // sorted, first `rank` used
    int sign = 0;
  };

  explicit PartialChirotope(int rank = 4);

  int rank() const { return rank_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }

  /// Stores chi(tuple) = sign (+1 or -1). Repeating an entry is a no-op;
  /// a conflicting sign or a tuple with repeated ids throws
  /// std::invalid_argument.
  void set(std::span<const std::size_t> tuple, int sign);

  /// Signed value on an ordered tuple; 0 for repeated ids; empty when the
  /// tuple is not defined.
  std::optional<int> get(std::span<const std::size_t> tuple) const;

  /// Entries mentioning u.
  std::span<const std::size_t> incident(std::size_t u) const;

  /// Largest vertex id mentioned plus one.
  std::size_t ground_size() const { return incidence_.size(); }

private:
  int rank_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// True iff every stored tuple containing u is realized with its stored
/// (nonzero) sign, in homogeneous coordinates of dimension rank - 1.
bool check_chirality(const PartialChirotope &chi, const Conformation &conf,
                     std::size_t u);

/// Checks all entries; returns the indices of violated ones.
std::vector<std::size_t> chirality_violations(const PartialChirotope &chi,
                                              const Conformation &conf);

/// Rank-3 five-point relation [123][145] - [124][135] + [125][134] = 0 with
/// signs given in that bracket order. True iff some positive magnitudes
/// satisfy it: all terms vanish, or the nonzero terms take both signs.
bool check_gp_signs(std::span<const int> signs);

/// Checks the rank-3 relation on every 5-subset whose ten triples are all
/// defined (each element taking the pivot role). Returns the number of
/// violating subsets.
std::size_t gp_violations(const PartialChirotope &chi);

// Ordered base (a, b, c, d) asking det(x_b - x_a, x_c - x_a, x_d - x_a) >= eps.
using Base = std::array<std::size_t, 4>;

struct RealizationRequest {
  std::size_t vertices = 0;
  std::vector<Base> bases;
};

struct RealizationResult {
  bool feasible = false;
  double epsilon = 0.0;
  Conformation conf;          // circle placement with z from the LP
  double min_margin = 0.0;    // min over bases of det - eps
  std::vector<std::size_t> infeasible_bases;  // support of the dual ray
  std::string message;
};

/// Linear form of det(x_b - x_a, ...) in (z_a, z_b, z_c, z_d) for fixed
/// planar coordinates.
std::array<double, 4> base_z_coefficients(const Conformation &planar,
                                          const Base &base);

/// Circle placement x = cos(2 pi i / n), y = sin(2 pi i / n) with
/// eps = sin(2 pi / n)^3; z from the dual simplex.
RealizationResult realize_lp(const RealizationRequest &request);

/// Bases in the form (a, b, c, d) with positive orientation, read off a
/// chirotope of rank 4: negative entries swap c and d.
std::vector<Base> positive_bases(const PartialChirotope &chi);

struct SplitResult {
  WeightedGraph graph;
  PartialChirotope chirotope;
  std::vector<std::size_t> merge_map;  // new vertex -> original vertex
};

/// Each victim that appears in k > 1 stored tuples becomes k vertices (the
/// original plus k - 1 clones), one tuple each, joined pairwise by W = 0
/// edges of spring `link_spring`. Clones carry no other edges.
SplitResult split_vertices(const WeightedGraph &graph,
                           const PartialChirotope &chi,
                           std::span<const std::size_t> victims,
                           double link_spring = 1.0);

/// Conformation on the original vertices: the mean position of each merge
/// class.
Conformation merge_conformation(const Conformation &split_conf,
                                std::span<const std::size_t> merge_map,
                                std::size_t original_vertices);

}  // namespace qcmc

#endif  // QCMC_CHIROTOPE_H_
