//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/pipeline.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcmc {

double edge_scale(const WeightedGraph &graph, const Conformation &conf) {
  double weights = 0.0;
  double lengths = 0.0;
  for (const auto &e : graph.edges())
    if (e.weight > 0.0) {
      weights += e.weight;
      lengths += distance(conf[e.u], conf[e.v]);
    }
  return weights > 0.0 && lengths > 0.0 ? weights / lengths : 1.0;
}

Conformation random_conformation(const WeightedGraph &graph, Rng &rng) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto &e : graph.edges())
    if (e.weight > 0.0) {
      sum += e.weight;
      ++count;
    }
  const double mean = count ? sum / static_cast<double>(count) : 1.0;
  const double side =
      mean * std::cbrt(static_cast<double>(std::max<std::size_t>(graph.size(), 1)));
  Conformation conf(graph.size());
  for (auto &x : conf) {
    x.x = side * (rng.uniform() - 0.5);
    if (graph.dim() > 1)
      x.y = side * (rng.uniform() - 0.5);
    if (graph.dim() > 2)
      x.z = side * (rng.uniform() - 0.5);
  }
  return conf;
}

const char *to_string(StartKind kind) {
  switch (kind) {
  case StartKind::Coordinates:
    return "coordinates";
  case StartKind::Realized:
    return "realized";
  case StartKind::Random:
    return "random";
  }
  return "?";
}

EmbedResult embed(const GraphDocument &doc, Rng &rng,
                  const VibrantParams &params, const AnnealOptions &options) {
  EmbedResult out;
  if (doc.has_coordinates) {
    out.start = StartKind::Coordinates;
    out.conf = doc.conf;
  } else if (!doc.chirotope.empty()) {
    if (doc.graph.dim() != 3 || doc.chirotope.rank() != 4)
      throw std::runtime_error(
          "embed: chirotope realization needs rank 4 in dimension 3");
    out.start = StartKind::Realized;
    out.realization = realize_lp({doc.graph.size(), positive_bases(doc.chirotope)});
    if (!out.realization.feasible)
      throw std::runtime_error("embed: " + out.realization.message);
    out.conf = out.realization.conf;
    const double s = edge_scale(doc.graph, out.conf);
    for (auto &x : out.conf)
      x = s * x;
  } else {
    out.start = StartKind::Random;
    out.conf = random_conformation(doc.graph, rng);
  }
  out.report = anneal_and_settle(doc.graph, out.conf, doc.radius, params,
                                 doc.chirotope, rng, options);
  return out;
}

}  // namespace qcmc
