//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/molecular.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace qcmc {

std::size_t EquippedSystem::inter_copy_edges() const {
  if (copies < 2)
    return 0;
  return per_copy * (copies == 2 ? 1 : copies);
}

EquippedSystem equip(const WeightedGraph &graph, const Conformation &conf,
                     const RadiusMap &radius, const BeadSpec &spec) {
  check_shapes(graph, conf, &radius);
  if (graph.dim() != 3)
    throw std::invalid_argument("equip: molecules live in dimension 3");
  const std::size_t k = spec.copies;
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("equip: copy count must be even and >= 2");
  const std::size_t atoms = graph.size();
  double total_p = 0.0;
  for (const auto &p : spec.pairs) {
    if (p.anchor1 >= atoms || p.anchor2 >= atoms)
      throw std::invalid_argument("equip: bead anchor is not an atom");
    if (!(p.spring > 0.0) || !(p.probability > 0.0) || !(p.radius > 0.0))
      throw std::invalid_argument(
          "equip: bead spring, probability and radius must be positive");
    total_p += p.probability;
  }

  EquippedSystem sys;
  sys.atoms = atoms;
  sys.per_copy = atoms + 2 * spec.pairs.size();
  sys.copies = k;
  sys.pairs = spec.pairs;
  double acc = 0.0;
  for (const auto &p : spec.pairs) {
    acc += p.probability / total_p;
    sys.cumulative.push_back(acc);
  }
  if (!sys.cumulative.empty())
    sys.cumulative.back() = 1.0;

  if (spec.chirality.rank() != 4)
    throw std::invalid_argument("equip: bead chirality must have rank 4");
  if (spec.chirality.ground_size() > sys.per_copy)
    throw std::invalid_argument("equip: chirality names unknown vertices");

  sys.graph = WeightedGraph(sys.per_copy * k, 3);
  sys.conf.resize(sys.per_copy * k);
  sys.radius.resize(sys.per_copy * k);
  sys.lj_group.assign(sys.per_copy * k, -1);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < atoms; ++a) {
      sys.conf[sys.vertex(c, a)] = conf[a];
      sys.radius[sys.vertex(c, a)] = radius[a];
      sys.lj_group[sys.vertex(c, a)] = static_cast<int>(c);
    }
    for (const auto &e : graph.edges())
      sys.graph.add_edge(sys.vertex(c, e.u), sys.vertex(c, e.v), e.weight,
                         e.spring);
    for (std::size_t l = 0; l < spec.pairs.size(); ++l) {
      const auto &p = spec.pairs[l];
      const std::size_t b1 = sys.bead1(c, l);
      const std::size_t b2 = sys.bead2(c, l);
      sys.conf[b1] = conf[p.anchor1] + p.offset1;
      sys.conf[b2] = conf[p.anchor2] + p.offset2;
      sys.radius[b1] = p.radius;
      sys.radius[b2] = p.radius;
      sys.graph.add_edge(b1, sys.vertex(c, p.anchor1), 0.0, p.spring);
      sys.graph.add_edge(b2, sys.vertex(c, p.anchor2), 0.0, p.spring);
    }
    for (const auto &entry : spec.chirality.entries()) {
      std::array<std::size_t, 4> t{};
      for (int i = 0; i < 4; ++i)
        t[i] = sys.vertex(c, entry.ids[i]);
      sys.chirality.set(t, entry.sign);
    }
  }
  const double hq = static_cast<double>(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t next = (c + 1) % k;
    if (k == 2 && c == 1)
      break;
    for (std::size_t v = 0; v < sys.per_copy; ++v)
      sys.graph.add_edge(sys.vertex(c, v), sys.vertex(next, v), 0.0, hq);
  }
  return sys;
}

NoneqStep noneq_step(EquippedSystem &sys, const NoneqParams &params, Rng &rng,
                     std::span<const char> frozen) {
  if (sys.pairs.empty())
    throw std::invalid_argument("noneq_step: system has no bead pairs");
  if (!frozen.empty() && frozen.size() != sys.graph.size())
    throw std::invalid_argument("noneq_step: frozen mask size mismatch");
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0))
    throw std::invalid_argument("noneq_step: alpha must lie in [0, 1]");

  NoneqStep step;
  const double u = rng.uniform();
  step.pair = static_cast<std::size_t>(
      std::upper_bound(sys.cumulative.begin(), sys.cumulative.end(), u) -
      sys.cumulative.begin());
  step.pair = std::min(step.pair, sys.pairs.size() - 1);
  step.n1 = rng.below(sys.copies);
  step.n2 = (step.n1 + sys.copies / 2) % sys.copies;

  std::size_t first = 0;   // plays particle a
  std::size_t second = 1;  // plays particle b
  if (params.flip)
    std::swap(first, second);
  auto bead = [&](std::size_t copy, std::size_t which) {
    return which == 0 ? sys.bead1(copy, step.pair) : sys.bead2(copy, step.pair);
  };
  const double d1 =
      distance(sys.conf[bead(step.n1, 0)], sys.conf[bead(step.n1, 1)]);
  const double d2 =
      distance(sys.conf[bead(step.n2, 0)], sys.conf[bead(step.n2, 1)]);
  step.less = d1 <= d2;
  step.forward = rng.uniform() < params.alpha;
  const std::size_t closer = step.less ? step.n1 : step.n2;
  const std::size_t farther = step.less ? step.n2 : step.n1;
  // Forward: particle a held at the closer copy, b at the farther one.
  if (step.forward) {
    step.frozen1 = bead(closer, first);
    step.frozen2 = bead(farther, second);
  } else {
    step.frozen1 = bead(farther, first);
    step.frozen2 = bead(closer, second);
  }

  std::vector<char> mask(sys.graph.size(), 0);
  if (!frozen.empty())
    std::copy(frozen.begin(), frozen.end(), mask.begin());
  mask[step.frozen1] = 1;
  mask[step.frozen2] = 1;
  std::vector<std::size_t> movable;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (!mask[v])
      movable.push_back(v);
  const std::size_t m =
      params.inner_steps ? *params.inner_steps : 50 * movable.size();

  PotentialModel model = params.model;
  if (model.lj_group.empty())
    model.lj_group = sys.lj_group;
  for (std::size_t i = 0; i < m && !movable.empty(); ++i) {
    const std::size_t v = movable[rng.below(movable.size())];
    switch (trial_move(sys.graph, sys.conf, v, sys.radius, model,
                       params.vibrant, sys.chirality, rng)) {
    case MoveOutcome::Accepted:
      ++step.mc.accepted;
      break;
    case MoveOutcome::Rejected:
      ++step.mc.rejected;
      break;
    case MoveOutcome::Fallback:
      ++step.mc.fallback_moves;
      break;
    }
    ++step.mc.steps;
  }
  return step;
}

PolymerConfig polymer_config(const KeyValueConfig &cfg) {
  PolymerConfig c;
  auto size = [&](const char *key, std::size_t fallback) {
    const long long v = cfg.get_int(key, static_cast<long long>(fallback));
    if (v < 0)
      throw std::invalid_argument(std::string(key) + " must be non-negative");
    return static_cast<std::size_t>(v);
  };
  c.atoms = size("atoms", c.atoms);
  c.copies = size("copies", c.copies);
  c.bond = cfg.get_double("bond", c.bond);
  c.bond_spring = cfg.get_double("bond_spring", c.bond_spring);
  c.lj_epsilon = cfg.get_double("lj_epsilon", c.lj_epsilon);
  c.lj_sigma = cfg.get_double("lj_sigma", c.lj_sigma);
  c.lj_cutoff = cfg.get_double("lj_cutoff", c.lj_cutoff);
  c.kT = cfg.get_double("kT", c.kT);
  c.atom_radius = cfg.get_double("atom_radius", c.atom_radius);
  c.bead_radius = cfg.get_double("bead_radius", c.bead_radius);
  c.bead_spring = cfg.get_double("bead_spring", c.bead_spring);
  c.helix_radius = cfg.get_double("helix_radius", c.helix_radius);
  c.helix_turn = cfg.get_double("helix_turn", c.helix_turn);
  c.right_handed = cfg.get_bool("right_handed", c.right_handed);
  c.pair_chirality = cfg.get_bool("pair_chirality", c.pair_chirality);
  c.alpha = cfg.get_double("alpha", c.alpha);
  c.flip = cfg.get_bool("flip", c.flip);
  c.fix_last = cfg.get_bool("fix_last", c.fix_last);
  c.inner_steps = size("inner_steps", c.inner_steps);
  c.equilibration = size("equilibration", c.equilibration);
  c.steps = size("steps", c.steps);
  for (const auto &key : cfg.unused())
    throw std::invalid_argument("unknown polymer key '" + key + "'");
  return c;
}

EquippedSystem build_polymer(const PolymerConfig &config) {
  if (config.atoms < 3)
    throw std::invalid_argument("polymer: at least 3 atoms required");
  const std::size_t n = config.atoms;
  WeightedGraph graph(n, 3);
  Conformation conf(n);
  for (std::size_t i = 0; i < n; ++i)
    conf[i] = Vec3{0.0, 0.0, config.bond * static_cast<double>(i)};
  for (std::size_t i = 0; i + 1 < n; ++i)
    graph.add_edge(i, i + 1, config.bond, config.bond_spring);
  const RadiusMap radius(n, config.atom_radius);

  BeadSpec spec;
  spec.copies = config.copies;
  const double turn = config.helix_turn * std::numbers::pi / 180.0 *
                      (config.right_handed ? 1.0 : -1.0);
  for (std::size_t l = 0; l + 1 < n; ++l) {
    BeadPair p;
    p.anchor1 = l;
    p.anchor2 = l + 1;
    p.spring = config.bead_spring;
    p.radius = config.bead_radius;
    // Both beads sit on one helix that advances by `turn` per atom.
    const double t = turn * static_cast<double>(l);
    p.offset1 = Vec3{config.helix_radius * std::cos(t),
                     config.helix_radius * std::sin(t), 0.0};
    p.offset2 = Vec3{config.helix_radius * std::cos(t + turn),
                     config.helix_radius * std::sin(t + turn), 0.0};
    spec.pairs.push_back(p);
  }
  // Chirality of the second-bead helix, read off the initial placement.
  Conformation local(n + 2 * spec.pairs.size());
  std::copy(conf.begin(), conf.end(), local.begin());
  std::vector<std::size_t> second;
  for (std::size_t l = 0; l < spec.pairs.size(); ++l) {
    local[n + 2 * l] = conf[l] + spec.pairs[l].offset1;
    local[n + 2 * l + 1] = conf[l + 1] + spec.pairs[l].offset2;
    second.push_back(n + 2 * l + 1);
  }
  auto add_base = [&](std::size_t a, std::size_t b, std::size_t c,
                      std::size_t d) {
    const std::array<std::size_t, 4> t{second[a], second[b], second[c],
                                       second[d]};
    const int s = chi_of_points(local, t, 3);
    if (s != 0)
      spec.chirality.set(t, s);
  };
  for (std::size_t i = 0; i + 4 < second.size(); ++i) {
    add_base(i, i + 1, i + 2, i + 3);
    add_base(i + 1, i + 2, i + 3, i + 4);
    add_base(i, i + 1, i + 3, i + 4);
  }
  // Each pair winds about its bond with the helix sense.
  if (config.pair_chirality)
    for (std::size_t l = 0; l < spec.pairs.size(); ++l) {
      const std::array<std::size_t, 4> t{l, l + 1, n + 2 * l, n + 2 * l + 1};
      spec.chirality.set(t, chi_of_points(local, t, 3));
    }
  return equip(graph, conf, radius, spec);
}

namespace {
  PotentialModel polymer_model(const PolymerConfig &config,
                               const EquippedSystem &sys) {
    PotentialModel model;
    model.kT = config.kT;
    model.lj.epsilon = config.lj_epsilon;
    model.lj.sigma = config.lj_sigma;
    model.lj.cutoff = config.lj_cutoff;
    model.lj_group = sys.lj_group;
    return model;
  }

  Vec3 atom_centroid(const EquippedSystem &sys) {
    Vec3 sum{};
    for (std::size_t c = 0; c < sys.copies; ++c)
      for (std::size_t a = 0; a < sys.atoms; ++a)
        sum += sys.conf[sys.vertex(c, a)];
    return (1.0 / static_cast<double>(sys.copies * sys.atoms)) * sum;
  }

  Vec3 copy_mean(const EquippedSystem &sys, std::size_t atom) {
    Vec3 sum{};
    for (std::size_t c = 0; c < sys.copies; ++c)
      sum += sys.conf[sys.vertex(c, atom)];
    return (1.0 / static_cast<double>(sys.copies)) * sum;
  }

  // Rotation angle about `axis` that best maps the vertices of `before`,
  // taken relative to `from`, onto those of `after`, taken relative to `to`.
  double rotation_about(const EquippedSystem &sys, const Conformation &before,
                        const Conformation &after, const Vec3 &from,
                        const Vec3 &to, const Vec3 &axis) {
    double s = 0.0;
    double c = 0.0;
    for (std::size_t k = 0; k < sys.copies; ++k)
      for (std::size_t a = 0; a < sys.per_copy; ++a) {
        const std::size_t v = sys.vertex(k, a);
        Vec3 p = before[v] - from;
        Vec3 q = after[v] - to;
        p -= dot(p, axis) * axis;
        q -= dot(q, axis) * axis;
        s += dot(cross(p, q), axis);
        c += dot(p, q);
      }
    return std::atan2(s, c);
  }
}  // namespace

PolymerRun run_polymer(const PolymerConfig &config, std::uint64_t seed) {
  EquippedSystem sys = build_polymer(config);
  Rng rng(static_cast<std::uint32_t>(seed));
  const PotentialModel model = polymer_model(config, sys);

  std::vector<char> fixed(sys.graph.size(), 0);
  if (config.fix_last)
    for (std::size_t c = 0; c < sys.copies; ++c)
      fixed[sys.vertex(c, sys.atoms - 1)] = 1;

  PolymerRun run;
  run.seed = seed;
  if (config.equilibration > 0) {
    MCOptions eq;
    eq.sweeps = config.equilibration;
    eq.trace = false;
    eq.frozen = fixed;
    mc_run(sys.graph, sys.conf, sys.radius, model, VibrantParams{},
           sys.chirality, rng, eq);
  }

  NoneqParams params;
  params.alpha = config.alpha;
  params.flip = config.flip;
  if (config.inner_steps != 0)
    params.inner_steps = config.inner_steps;
  params.model = model;
  std::size_t accepted = 0;
  std::size_t steps = 0;
  // Drift and twist are summed per jump along the current first-to-last
  // atom axis, so a coiling chain is followed in its own frame.
  for (std::size_t i = 0; i < config.steps; ++i) {
    const Conformation before = sys.conf;
    Vec3 axis = copy_mean(sys, sys.atoms - 1) - copy_mean(sys, 0);
    axis = (1.0 / norm(axis)) * axis;
    const Vec3 com = atom_centroid(sys);
    const Vec3 pivot = copy_mean(sys, sys.atoms - 1);
    const NoneqStep step = noneq_step(sys, params, rng, fixed);
    accepted += step.mc.accepted;
    steps += step.mc.steps;
    (step.forward ? run.forward : run.backward) += 1;
    const Vec3 com_after = atom_centroid(sys);
    run.axial_drift += dot(com_after - com, axis);
    run.twist_angle +=
        config.fix_last
            ? rotation_about(sys, before, sys.conf, pivot, pivot, axis)
            : rotation_about(sys, before, sys.conf, com, com_after, axis);
  }
  run.acceptance_rate =
      steps ? static_cast<double>(accepted) / static_cast<double>(steps) : 0.0;
  run.in_space = in_restricted_space(sys.graph, sys.conf, sys.radius);
  return run;
}

std::vector<PolymerRun> polymer_demo(const PolymerConfig &config,
                                     const std::vector<std::uint64_t> &seeds,
                                     unsigned threads) {
  std::vector<PolymerRun> out(seeds.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      try {
        out[i] = run_polymer(config, seeds[i]);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, out.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return out;
}

}  // namespace qcmc
