//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_GRAPH_H_
#define QCMC_GRAPH_H_

#include <cstddef>
#include <span>
#include <vector>

#include "qcmc/vec.h"

namespace qcmc {

struct Edge {
  std::size_t to = 0;
  double weight = 0.0;  // desired distance W
  double spring = 1.0;  // spring constant h
};

struct EdgeRecord {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
  double spring = 1.0;
};

// Undirected weighted graph with dense vertex ids and per-vertex adjacency
// arrays. Each undirected edge is stored once in each endpoint's array.
class WeightedGraph {
public:
  explicit WeightedGraph(std::size_t vertices = 0, int dim = 3);

  std::size_t size() const { return adjacency_.size(); }
  int dim() const { return dim_; }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t add_vertex();

  /// Adds {u, v}. W >= 0 (W = 0 only for split or bead links), h > 0.
  /// Throws std::invalid_argument on self loops, duplicates, bad values and
  /// std::out_of_range on unknown vertices.
  void add_edge(std::size_t u, std::size_t v, double weight, double spring);

  bool has_edge(std::size_t u, std::size_t v) const;
  std::span<const Edge> neighbors(std::size_t u) const;
  double spring_sum(std::size_t u) const;

  /// Every edge once, with u < v, in insertion order of u's array.
  std::vector<EdgeRecord> edges() const;

private:
  int dim_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Edge>> adjacency_;
};

using Conformation = std::vector<Vec3>;
using RadiusMap = std::vector<double>;

/// Spring-weighted center of u. Neighbours at distance zero push the result
/// along the direction from A[u] to the partial center of the others; an
/// isolated vertex (or one whose neighbours all coincide with it) is its own
/// center.
Vec3 center(const WeightedGraph &graph, const Conformation &conf,
            std::size_t u);

/// Sum over edges of (h / 2)(|e| - W)^2.
double hooke_potential(const WeightedGraph &graph, const Conformation &conf);

/// Hooke terms of the edges incident to u.
double local_hooke(const WeightedGraph &graph, const Conformation &conf,
                   std::size_t u);

/// True iff |A[u] - center(u)| < S(u) for every u with S(u) > 0.
bool in_restricted_space(const WeightedGraph &graph, const Conformation &conf,
                         const RadiusMap &radius);

/// Number of vertices with S(u) > 0 that sit at or beyond their radius.
std::size_t count_outside(const WeightedGraph &graph, const Conformation &conf,
                          const RadiusMap &radius);

/// Throws std::invalid_argument unless conf and radius match the graph.
void check_shapes(const WeightedGraph &graph, const Conformation &conf,
                  const RadiusMap *radius = nullptr);

}  // namespace qcmc

#endif  // QCMC_GRAPH_H_
