//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_DISTGEO_H_
#define QCMC_DISTGEO_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcmc/chirotope.h"
#include "qcmc/graph.h"
#include "qcmc/rng.h"

namespace qcmc {

enum class VisitOrder { Cyclic, Random };

struct CenteringSchedule {
  VisitOrder order = VisitOrder::Random;
  std::size_t max_steps = 100000;
  // Stops once the largest displacement over the last |V| steps is below
  // this length.
  double stop_displacement = 1e-9;
};

struct CenteringStep {
  std::size_t step = 0;
  std::size_t vertex = 0;
  double displacement = 0.0;
  double potential = 0.0;
};

struct CenteringOptions {
  const PartialChirotope *chirality = nullptr;  // moves that break it revert
  const RadiusMap *radius = nullptr;            // enables stall reporting
  bool record_trace = false;
  // Per-step check of the potential decrease against (sum h) |l|^2 / 2.
  double monotone_slack = 1e-10;
};

struct CenteringReport {
  std::size_t steps = 0;
  bool converged = false;     // displacement window fell below the threshold
  bool monotone = true;       // every step met the decrease bound
  double worst_bound_gap = 0.0;  // most negative (decrease - bound) seen
  double initial_potential = 0.0;
  double final_potential = 0.0;
  bool stalled = false;  // < 1e-12 improvement over 10 |V| steps outside D(S)
  std::size_t reverted = 0;  // chirality reverts
  std::vector<CenteringStep> trace;
};

/// Plain iterative centering: each step moves one vertex onto its center.
/// Random order draws vertices from `rng`; cyclic order ignores it.
CenteringReport iterative_centering(const WeightedGraph &graph,
                                    Conformation &conf,
                                    const CenteringSchedule &schedule, Rng &rng,
                                    const CenteringOptions &options = {});

struct VibrantParams {
  double c = 1.1;   // noise factor (> 1)
  double C = 10.0;  // step cap factor (> 1)

  void validate() const;
};

enum class VibrantMove { Capped, Bounded, Jitter };

struct VibrantOutcome {
  VibrantMove move = VibrantMove::Jitter;
  bool reverted = false;  // chirality check failed
};

/// One vibrant centering of u: a step toward the center capped at C S[u] or
/// S[u], or a jitter around the center, each with c S[u]-scaled ball noise;
/// reverted when the chirality check fails.
VibrantOutcome vibrant_center(const WeightedGraph &graph, Conformation &conf,
                              std::size_t u, const RadiusMap &radius,
                              const VibrantParams &params,
                              const PartialChirotope &chirality, Rng &rng);

/// True iff every neighbour v of u has |A[v] - center(v)| < S[v] or S[v] = 0.
bool check_distance(const WeightedGraph &graph, const Conformation &conf,
                    std::size_t u, const RadiusMap &radius);

struct VibrantRunReport {
  std::size_t steps = 0;
  bool in_space = false;
  std::size_t reverted = 0;
};

/// Vibrant centering of uniformly drawn vertices until D(S) holds (checked
/// every `check_every` steps) or `max_steps` is spent.
VibrantRunReport vibrant_iterate(const WeightedGraph &graph, Conformation &conf,
                                 const RadiusMap &radius,
                                 const VibrantParams &params,
                                 const PartialChirotope &chirality, Rng &rng,
                                 std::size_t max_steps,
                                 std::size_t check_every = 1);

struct AnnealOptions {
  // Radius multipliers; all but the last stage run their full budget.
  std::vector<double> stages{100.0, 10.0, 1.0};
  std::size_t steps_per_stage = 200000;
  // Chirality-checked plain centering after the last stage; vibrant and
  // settle rounds alternate until D(S) or the round budget runs out.
  std::size_t settle_steps = 200000;
  std::size_t rounds = 4;
  std::size_t trace_every = 0;  // 0 disables the trace
};

struct AnnealReport {
  bool in_space = false;
  std::size_t steps = 0;
  std::size_t rounds = 0;
  std::size_t outside = 0;  // vertices outside their radius at the end
  double final_potential = 0.0;
  std::vector<std::size_t> chirality_violations;
  std::vector<CenteringStep> trace;  // every trace_every-th step
};

/// Vibrant stages at S = multiplier * S_target, then settling. Reports
/// membership honestly; never throws on failure to reach D(S).
AnnealReport anneal_and_settle(const WeightedGraph &graph, Conformation &conf,
                               const RadiusMap &target,
                               const VibrantParams &params,
                               const PartialChirotope &chirality, Rng &rng,
                               const AnnealOptions &options = {});

/// Ball noise in the graph dimension.
Vec3 random_vector(const WeightedGraph &graph, Rng &rng);

}  // namespace qcmc

#endif  // QCMC_DISTGEO_H_
