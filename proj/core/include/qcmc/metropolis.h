//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_METROPOLIS_H_
#define QCMC_METROPOLIS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcmc/chirotope.h"
#include "qcmc/distgeo.h"
#include "qcmc/graph.h"
#include "qcmc/rng.h"

namespace qcmc {

// Lennard-Jones 4 eps ((sigma/r)^12 - (sigma/r)^6), cut at `cutoff` and
// shifted so the energy is continuous there.
struct LennardJones {
  double epsilon = 0.0;
  double sigma = 1.0;
  double cutoff = 2.5;

  double operator()(double r) const;
};

struct PotentialModel {
  bool hooke = true;
  LennardJones lj;
  double kT = 1.0;
  // LJ acts on non-adjacent pairs sharing a group id >= 0. Empty: all
  // vertices in group 0.
  std::vector<int> lj_group;

  /// Throws std::invalid_argument when kT <= 0, cutoff < sigma or the group
  /// vector has the wrong size.
  void validate(std::size_t vertices) const;
};

/// All terms involving u.
double local_potential(const PotentialModel &model, const WeightedGraph &graph,
                       const Conformation &conf, std::size_t u);

double total_potential(const PotentialModel &model, const WeightedGraph &graph,
                       const Conformation &conf);

enum class MoveOutcome { Accepted, Rejected, Fallback };

/// One trial move of u: a ball proposal of radius S[u] accepted by the
/// Metropolis rule when it keeps u and its neighbours inside their radii
/// and keeps chirality; otherwise, if u itself sits outside, a vibrant
/// fallback step (tagged Fallback, not detailed-balanced).
MoveOutcome trial_move(const WeightedGraph &graph, Conformation &conf,
                       std::size_t u, const RadiusMap &radius,
                       const PotentialModel &model, const VibrantParams &params,
                       const PartialChirotope &chirality, Rng &rng);

struct MCReport {
  std::size_t steps = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t fallback_moves = 0;
  std::vector<double> energy_trace;   // per sweep
  std::vector<char> in_space_trace;   // per sweep, global D(S) membership
  bool in_space = false;              // at the end

  double acceptance_rate() const {
    return steps ? static_cast<double>(accepted) / static_cast<double>(steps)
                 : 0.0;
  }
};

struct MCOptions {
  std::size_t sweeps = 100;
  bool trace = true;
  // Vertices with frozen[v] != 0 are never moved; one sweep is one trial
  // per movable vertex.
  std::span<const char> frozen;
};

/// Random-vertex trial moves, |movable| per sweep.
MCReport mc_run(const WeightedGraph &graph, Conformation &conf,
                const RadiusMap &radius, const PotentialModel &model,
                const VibrantParams &params, const PartialChirotope &chirality,
                Rng &rng, const MCOptions &options);

}  // namespace qcmc

#endif  // QCMC_METROPOLIS_H_
