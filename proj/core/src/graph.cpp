//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/graph.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcmc {

WeightedGraph::WeightedGraph(std::size_t vertices, int dim)
    : dim_(dim), adjacency_(vertices) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("graph: dimension must be 1, 2 or 3");
}

std::size_t WeightedGraph::add_vertex() {
  adjacency_.emplace_back();
  return adjacency_.size() - 1;
}

void WeightedGraph::add_edge(std::size_t u, std::size_t v, double weight,
                             double spring) {
  if (u >= size() || v >= size())
    throw std::out_of_range("graph: edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " names an unknown vertex");
  if (u == v)
    throw std::invalid_argument("graph: self loop on vertex " +
                                std::to_string(u));
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw std::invalid_argument("graph: edge weight must be finite and >= 0");
  if (!(spring > 0.0) || !std::isfinite(spring))
    throw std::invalid_argument("graph: spring constant must be positive");
  if (has_edge(u, v))
    throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) +
                                "-" + std::to_string(v));
  adjacency_[u].push_back({v, weight, spring});
  adjacency_[v].push_back({u, weight, spring});
  ++edge_count_;
}

bool WeightedGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= size() || v >= size())
    return false;
  for (const auto &e : adjacency_[u])
    if (e.to == v)
      return true;
  return false;
}

std::span<const Edge> WeightedGraph::neighbors(std::size_t u) const {
  return adjacency_.at(u);
}

double WeightedGraph::spring_sum(std::size_t u) const {
  double s = 0.0;
  for (const auto &e : adjacency_.at(u))
    s += e.spring;
  return s;
}

std::vector<EdgeRecord> WeightedGraph::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u)
    for (const auto &e : adjacency_[u])
      if (u < e.to)
        out.push_back({u, e.to, e.weight, e.spring});
  return out;
}

Vec3 center(const WeightedGraph &graph, const Conformation &conf,
            std::size_t u) {
  double t = 0.0;
  double q = 0.0;
  double f = 0.0;
  Vec3 y;
  const Vec3 &au = conf[u];
  for (const auto &e : graph.neighbors(u)) {
    const Vec3 &av = conf[e.to];
    const Vec3 z = au - av;
    const double r = norm(z);
    if (r > 0.0) {
      y += e.spring * (av + (e.weight / r) * z);
      t += e.spring;
    } else {
      f += e.spring * e.weight;
      q += e.spring;
    }
  }
  if (q > 0.0 && t > 0.0) {
    const Vec3 z = (1.0 / t) * y - au;
    const double r = norm(z);
    if (r > 0.0) {
      y = y + q * au + (f / r) * z;
      y = (t / (t + q)) * y;
    }
  }
  if (t > 0.0)
    return (1.0 / t) * y;
  return au;
}

double hooke_potential(const WeightedGraph &graph, const Conformation &conf) {
  double sum = 0.0;
  for (std::size_t u = 0; u < graph.size(); ++u)
    for (const auto &e : graph.neighbors(u))
      if (u < e.to) {
        const double d = distance(conf[u], conf[e.to]) - e.weight;
        sum += 0.5 * e.spring * d * d;
      }
  return sum;
}

double local_hooke(const WeightedGraph &graph, const Conformation &conf,
                   std::size_t u) {
  double sum = 0.0;
  for (const auto &e : graph.neighbors(u)) {
    const double d = distance(conf[u], conf[e.to]) - e.weight;
    sum += 0.5 * e.spring * d * d;
  }
  return sum;
}

std::size_t count_outside(const WeightedGraph &graph, const Conformation &conf,
                          const RadiusMap &radius) {
  std::size_t outside = 0;
  for (std::size_t u = 0; u < graph.size(); ++u)
    if (radius[u] > 0.0 && !(distance(conf[u], center(graph, conf, u)) <
                             radius[u]))
      ++outside;
  return outside;
}

bool in_restricted_space(const WeightedGraph &graph, const Conformation &conf,
                         const RadiusMap &radius) {
  for (std::size_t u = 0; u < graph.size(); ++u)
    if (radius[u] > 0.0 &&
        !(distance(conf[u], center(graph, conf, u)) < radius[u]))
      return false;
  return true;
}

void check_shapes(const WeightedGraph &graph, const Conformation &conf,
                  const RadiusMap *radius) {
  if (conf.size() != graph.size())
    throw std::invalid_argument("conformation has " +
                                std::to_string(conf.size()) +
                                " points for a graph of " +
                                std::to_string(graph.size()) + " vertices");
  if (radius && radius->size() != graph.size())
    throw std::invalid_argument("radius map size does not match the graph");
}

}  // namespace qcmc
