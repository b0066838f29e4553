//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/metropolis.h"

#include <cmath>
#include <stdexcept>

namespace qcmc {
namespace {
  double lj_raw(double eps, double sigma, double r) {
    const double s2 = (sigma * sigma) / (r * r);
    const double s6 = s2 * s2 * s2;
    return 4.0 * eps * (s6 * s6 - s6);
  }

  int group_of(const PotentialModel &model, std::size_t v) {
    return model.lj_group.empty() ? 0 : model.lj_group[v];
  }

  double lj_terms(const PotentialModel &model, const WeightedGraph &graph,
                  const Conformation &conf, std::size_t u, bool upper_only) {
    if (model.lj.epsilon == 0.0)
      return 0.0;
    const int gu = group_of(model, u);
    if (gu < 0)
      return 0.0;
    const auto neighbors = graph.neighbors(u);
    const double cut2 = model.lj.cutoff * model.lj.cutoff;
    double sum = 0.0;
    for (std::size_t v = upper_only ? u + 1 : 0; v < graph.size(); ++v) {
      if (v == u || group_of(model, v) != gu)
        continue;
      const Vec3 d = conf[u] - conf[v];
      const double r2 = dot(d, d);
      if (r2 >= cut2)
        continue;
      bool bonded = false;
      for (const auto &e : neighbors)
        if (e.to == v) {
          bonded = true;
          break;
        }
      if (!bonded)
        sum += model.lj(std::sqrt(r2));
    }
    return sum;
  }
}  // namespace

double LennardJones::operator()(double r) const {
  if (r >= cutoff)
    return 0.0;
  return lj_raw(epsilon, sigma, r) - lj_raw(epsilon, sigma, cutoff);
}

void PotentialModel::validate(std::size_t vertices) const {
  if (!(kT > 0.0))
    throw std::invalid_argument("potential: kT must be positive");
  if (lj.epsilon != 0.0 && !(lj.cutoff >= lj.sigma && lj.sigma > 0.0))
    throw std::invalid_argument("potential: need 0 < sigma <= cutoff");
  if (!lj_group.empty() && lj_group.size() != vertices)
    throw std::invalid_argument("potential: lj_group size mismatch");
}

double local_potential(const PotentialModel &model, const WeightedGraph &graph,
                       const Conformation &conf, std::size_t u) {
  double e = model.hooke ? local_hooke(graph, conf, u) : 0.0;
  return e + lj_terms(model, graph, conf, u, false);
}

double total_potential(const PotentialModel &model, const WeightedGraph &graph,
                       const Conformation &conf) {
  double e = model.hooke ? hooke_potential(graph, conf) : 0.0;
  for (std::size_t u = 0; u < graph.size(); ++u)
    e += lj_terms(model, graph, conf, u, true);
  return e;
}

MoveOutcome trial_move(const WeightedGraph &graph, Conformation &conf,
                       std::size_t u, const RadiusMap &radius,
                       const PotentialModel &model, const VibrantParams &params,
                       const PartialChirotope &chirality, Rng &rng) {
  const Vec3 a = conf[u];
  const double s = radius[u];
  conf[u] = a + s * random_vector(graph, rng);
  if (distance(conf[u], center(graph, conf, u)) < s &&
      check_distance(graph, conf, u, radius) &&
      check_chirality(chirality, conf, u)) {
    const double e_new = local_potential(model, graph, conf, u);
    const Vec3 z = conf[u];
    conf[u] = a;
    const double e_old = local_potential(model, graph, conf, u);
    // Random() is drawn only for uphill proposals.
    if (e_new < e_old || rng.uniform() < std::exp((e_old - e_new) / model.kT)) {
      conf[u] = z;
      return MoveOutcome::Accepted;
    }
    return MoveOutcome::Rejected;
  }

  conf[u] = a;
  const Vec3 z = center(graph, conf, u);
  const double r = distance(a, z);
  if (!(r > s || !check_distance(graph, conf, u, radius)))
    return MoveOutcome::Rejected;
  if (r > params.C * s)
    conf[u] = a + params.C * s *
                      ((1.0 / r) * (z - a) + params.c * random_vector(graph, rng));
  else if (r > s)
    conf[u] = a + s * ((1.0 / r) * (z - a) + params.c * random_vector(graph, rng));
  else
    conf[u] = z + s * params.c * random_vector(graph, rng);
  if (!check_chirality(chirality, conf, u))
    conf[u] = a;
  return MoveOutcome::Fallback;
}

MCReport mc_run(const WeightedGraph &graph, Conformation &conf,
                const RadiusMap &radius, const PotentialModel &model,
                const VibrantParams &params, const PartialChirotope &chirality,
                Rng &rng, const MCOptions &options) {
  check_shapes(graph, conf, &radius);
  model.validate(graph.size());
  params.validate();
  if (!options.frozen.empty() && options.frozen.size() != graph.size())
    throw std::invalid_argument("mc_run: frozen mask size mismatch");

  std::vector<std::size_t> movable;
  for (std::size_t v = 0; v < graph.size(); ++v)
    if (options.frozen.empty() || !options.frozen[v])
      movable.push_back(v);

  MCReport report;
  if (movable.empty())
    return report;
  for (std::size_t sweep = 0; sweep < options.sweeps; ++sweep) {
    for (std::size_t k = 0; k < movable.size(); ++k) {
      const std::size_t u = movable[rng.below(movable.size())];
      switch (trial_move(graph, conf, u, radius, model, params, chirality,
                         rng)) {
      case MoveOutcome::Accepted:
        ++report.accepted;
        break;
      case MoveOutcome::Rejected:
        ++report.rejected;
        break;
      case MoveOutcome::Fallback:
        ++report.fallback_moves;
        break;
      }
      ++report.steps;
    }
    if (options.trace) {
      report.energy_trace.push_back(total_potential(model, graph, conf));
      report.in_space_trace.push_back(in_restricted_space(graph, conf, radius));
    }
  }
  report.in_space = in_restricted_space(graph, conf, radius);
  return report;
}

}  // namespace qcmc
