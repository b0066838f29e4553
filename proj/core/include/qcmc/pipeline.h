//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_PIPELINE_H_
#define QCMC_PIPELINE_H_

#include <string>

#include "qcmc/chirotope.h"
#include "qcmc/distgeo.h"
#include "qcmc/graph_io.h"
#include "qcmc/rng.h"

namespace qcmc {

/// Ratio of summed edge weights to summed edge lengths over edges with
/// W > 0; 1 when undefined.
double edge_scale(const WeightedGraph &graph, const Conformation &conf);

/// Uniform points in a cube whose side grows with the mean edge weight and
/// the cube root of the vertex count.
Conformation random_conformation(const WeightedGraph &graph, Rng &rng);

enum class StartKind { Coordinates, Realized, Random };

const char *to_string(StartKind kind);

struct EmbedResult {
  Conformation conf;
  StartKind start = StartKind::Random;
  RealizationResult realization;  // filled when start == Realized
  AnnealReport report;
};

/// Document coordinates when present; otherwise the LP realization of the
/// chirotope scaled to the edge weights; otherwise random points. Then
/// anneal_and_settle towards D(S). Throws std::runtime_error when the
/// chirotope has no realization for the circle placement.
EmbedResult embed(const GraphDocument &doc, Rng &rng,
                  const VibrantParams &params, const AnnealOptions &options);

}  // namespace qcmc

#endif  // QCMC_PIPELINE_H_
