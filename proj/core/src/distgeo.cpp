//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/distgeo.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcmc {

Vec3 random_vector(const WeightedGraph &graph, Rng &rng) {
  return rng.unit_ball(graph.dim());
}

CenteringReport iterative_centering(const WeightedGraph &graph,
                                    Conformation &conf,
                                    const CenteringSchedule &schedule, Rng &rng,
                                    const CenteringOptions &options) {
  check_shapes(graph, conf, options.radius);
  CenteringReport report;
  const std::size_t n = graph.size();
  report.initial_potential = hooke_potential(graph, conf);
  report.final_potential = report.initial_potential;
  if (n == 0) {
    report.converged = true;
    return report;
  }

  double potential = report.initial_potential;
  std::size_t quiet = 0;
  const std::size_t stall_window = 10 * n;
  double window_start = potential;
  bool plateau = false;

  for (std::size_t step = 0; step < schedule.max_steps; ++step) {
    const std::size_t u =
        schedule.order == VisitOrder::Cyclic ? step % n : rng.below(n);
    const Vec3 old = conf[u];
    const double before = local_hooke(graph, conf, u);
    conf[u] = center(graph, conf, u);
    double displacement = 0.0;
    double decrease = 0.0;
    if (options.chirality && !check_chirality(*options.chirality, conf, u)) {
      conf[u] = old;
      ++report.reverted;
    } else {
      displacement = distance(old, conf[u]);
      decrease = before - local_hooke(graph, conf, u);
      const double gap =
          decrease - 0.5 * graph.spring_sum(u) * displacement * displacement;
      report.worst_bound_gap = std::min(report.worst_bound_gap, gap);
      if (gap < -options.monotone_slack)
        report.monotone = false;
    }
    potential -= decrease;
    report.steps = step + 1;
    if (options.record_trace)
      report.trace.push_back({step, u, displacement, potential});

    quiet = displacement < schedule.stop_displacement ? quiet + 1 : 0;
    if (quiet >= n) {
      report.converged = true;
      break;
    }
    if ((step + 1) % stall_window == 0) {
      plateau = window_start - potential < 1e-12;
      window_start = potential;
    }
  }

  report.final_potential = hooke_potential(graph, conf);
  if (options.radius && (report.converged || plateau))
    report.stalled = !in_restricted_space(graph, conf, *options.radius);
  return report;
}

void VibrantParams::validate() const {
  if (!(c > 1.0) || !(C > 1.0))
    throw std::invalid_argument("vibrant: both c and C must exceed 1");
}

VibrantOutcome vibrant_center(const WeightedGraph &graph, Conformation &conf,
                              std::size_t u, const RadiusMap &radius,
                              const VibrantParams &params,
                              const PartialChirotope &chirality, Rng &rng) {
  VibrantOutcome out;
  const Vec3 a = conf[u];
  const Vec3 z = center(graph, conf, u);
  const double r = distance(a, z);
  const double s = radius[u];
  if (r > params.C * s) {
    out.move = VibrantMove::Capped;
    conf[u] = a + params.C * s *
                      ((1.0 / r) * (z - a) + params.c * random_vector(graph, rng));
  } else if (r > s) {
    out.move = VibrantMove::Bounded;
    conf[u] = a + s * ((1.0 / r) * (z - a) + params.c * random_vector(graph, rng));
  } else {
    out.move = VibrantMove::Jitter;
    conf[u] = z + s * params.c * random_vector(graph, rng);
  }
  if (!check_chirality(chirality, conf, u)) {
    conf[u] = a;
    out.reverted = true;
  }
  return out;
}

bool check_distance(const WeightedGraph &graph, const Conformation &conf,
                    std::size_t u, const RadiusMap &radius) {
  for (const auto &e : graph.neighbors(u)) {
    const std::size_t v = e.to;
    if (!(distance(conf[v], center(graph, conf, v)) < radius[v] ||
          radius[v] == 0.0))
      return false;
  }
  return true;
}

VibrantRunReport vibrant_iterate(const WeightedGraph &graph, Conformation &conf,
                                 const RadiusMap &radius,
                                 const VibrantParams &params,
                                 const PartialChirotope &chirality, Rng &rng,
                                 std::size_t max_steps,
                                 std::size_t check_every) {
  check_shapes(graph, conf, &radius);
  params.validate();
  VibrantRunReport report;
  check_every = std::max<std::size_t>(check_every, 1);
  report.in_space = in_restricted_space(graph, conf, radius) &&
                    chirality_violations(chirality, conf).empty();
  while (!report.in_space && report.steps < max_steps) {
    const std::size_t u = rng.below(graph.size());
    if (vibrant_center(graph, conf, u, radius, params, chirality, rng).reverted)
      ++report.reverted;
    ++report.steps;
    if (report.steps % check_every == 0)
      report.in_space = in_restricted_space(graph, conf, radius) &&
                        chirality_violations(chirality, conf).empty();
  }
  return report;
}

AnnealReport anneal_and_settle(const WeightedGraph &graph, Conformation &conf,
                               const RadiusMap &target,
                               const VibrantParams &params,
                               const PartialChirotope &chirality, Rng &rng,
                               const AnnealOptions &options) {
  check_shapes(graph, conf, &target);
  params.validate();
  for (std::size_t i = 0; i < options.stages.size(); ++i)
    if (!(options.stages[i] >= 1.0) ||
        (i > 0 && options.stages[i] > options.stages[i - 1]))
      throw std::invalid_argument(
          "anneal: stages must be non-increasing multipliers >= 1");

  AnnealReport report;
  auto member = [&] {
    return in_restricted_space(graph, conf, target) &&
           chirality_violations(chirality, conf).empty();
  };
  report.in_space = member();
  const std::size_t n = std::max<std::size_t>(graph.size(), 1);
  const bool tracing = options.trace_every > 0;
  double potential = tracing ? hooke_potential(graph, conf) : 0.0;

  auto vibrant_step = [&](const RadiusMap &radius) {
    const std::size_t u = rng.below(graph.size());
    if (!tracing) {
      vibrant_center(graph, conf, u, radius, params, chirality, rng);
      ++report.steps;
      return;
    }
    const Vec3 old = conf[u];
    const double before = local_hooke(graph, conf, u);
    vibrant_center(graph, conf, u, radius, params, chirality, rng);
    potential += local_hooke(graph, conf, u) - before;
    if (report.steps % options.trace_every == 0)
      report.trace.push_back(
          {report.steps, u, distance(old, conf[u]), potential});
    ++report.steps;
  };

  for (std::size_t round = 0;
       round < options.rounds && !report.in_space && graph.size() > 0;
       ++round) {
    report.rounds = round + 1;
    for (std::size_t i = 0; i < options.stages.size(); ++i) {
      RadiusMap scaled = target;
      for (double &s : scaled)
        s *= options.stages[i];
      const bool last = i + 1 == options.stages.size();
      // Coarse stages spend their whole budget; the last one stops once
      // D(S) and the chirotope hold.
      for (std::size_t k = 0; k < options.steps_per_stage; ++k) {
        vibrant_step(scaled);
        if (last && (k + 1) % n == 0 &&
            in_restricted_space(graph, conf, scaled) &&
            chirality_violations(chirality, conf).empty())
          break;
      }
    }
    report.in_space = member();

    // Settle: chirality-checked centering in sweeps, checking membership
    // after each block.
    CenteringSchedule sweep{VisitOrder::Cyclic, 10 * n, 0.0};
    CenteringOptions checked;
    checked.chirality = &chirality;
    checked.record_trace = tracing;
    for (std::size_t spent = 0;
         !report.in_space && spent < options.settle_steps;
         spent += sweep.max_steps) {
      const auto block = iterative_centering(graph, conf, sweep, rng, checked);
      for (const auto &t : block.trace)
        if ((report.steps + t.step) % options.trace_every == 0)
          report.trace.push_back({report.steps + t.step, t.vertex,
                                  t.displacement, t.potential});
      report.steps += block.steps;
      report.in_space = member();
      if (block.converged)
        break;
    }
    if (tracing)
      potential = hooke_potential(graph, conf);
  }
  report.outside = count_outside(graph, conf, target);
  report.final_potential = hooke_potential(graph, conf);
  report.chirality_violations = chirality_violations(chirality, conf);
  return report;
}

}  // namespace qcmc
