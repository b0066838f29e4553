//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_MOLECULAR_H_
#define QCMC_MOLECULAR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcmc/chirotope.h"
#include "qcmc/distgeo.h"
#include "qcmc/graph.h"
#include "qcmc/kvconfig.h"
#include "qcmc/metropolis.h"
#include "qcmc/rng.h"

namespace qcmc {

// Two artificial beads hooked to molecule atoms by zero-length springs. The
// pair plays the part of the two particles of the directed jump process.
struct BeadPair {
  std::size_t anchor1 = 0;
  std::size_t anchor2 = 0;
  double spring = 1.0;       // h_a
  double probability = 1.0;  // p_l, normalised over all pairs by equip()
  double radius = 1.0;       // S of both beads
  Vec3 offset1{};            // initial bead positions relative to anchors
  Vec3 offset2{};
};

struct BeadSpec {
  std::vector<BeadPair> pairs;
  std::size_t copies = 4;  // K, even
  // Rank-4 bases on single-copy vertex ids (atoms first, then bead1, bead2
  // of each pair); replicated into every copy.
  PartialChirotope chirality{4};
};

// K copies of a bead-equipped molecule joined by ring springs of constant K.
// Vertex id of (copy, local) is copy * per_copy + local; locals are the
// molecule atoms followed by bead1, bead2 of every pair.
struct EquippedSystem {
  WeightedGraph graph;
  Conformation conf;
  RadiusMap radius;
  PartialChirotope chirality{4};
  std::vector<int> lj_group;  // copy id for atoms, -1 for beads
  std::vector<BeadPair> pairs;
  std::vector<double> cumulative;  // normalised cumulative p_l
  std::size_t atoms = 0;
  std::size_t per_copy = 0;
  std::size_t copies = 0;

  std::size_t vertex(std::size_t copy, std::size_t local) const {
    return copy * per_copy + local;
  }
  std::size_t bead1(std::size_t copy, std::size_t pair) const {
    return vertex(copy, atoms + 2 * pair);
  }
  std::size_t bead2(std::size_t copy, std::size_t pair) const {
    return vertex(copy, atoms + 2 * pair + 1);
  }
  std::size_t inter_copy_edges() const;
};

/// Adds the bead pairs to the molecule and replicates it K times. For K = 2
/// the two ring springs between the copies coincide and appear once.
/// Throws std::invalid_argument on a bad anchor, odd K, non-positive
/// constants or shape mismatches.
EquippedSystem equip(const WeightedGraph &graph, const Conformation &conf,
                     const RadiusMap &radius, const BeadSpec &spec);

struct NoneqParams {
  double alpha = 1.0;  // probability of the forward freeze
  bool flip = false;   // swap the roles of bead1 and bead2
  // M; empty gives 50 * movable vertex count.
  std::optional<std::size_t> inner_steps;
  PotentialModel model;
  VibrantParams vibrant;
};

struct NoneqStep {
  std::size_t pair = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  bool less = false;     // bead separation at n1 below (or equal to) n2
  bool forward = false;  // bead1 frozen at the closer copy
  std::size_t frozen1 = 0;  // vertex ids held fixed
  std::size_t frozen2 = 0;
  MCReport mc;
};

/// One directed jump: picks pair l by p_l, copies n1 and n1 + K/2, freezes
/// one bead of each and runs M trial moves over the other movable vertices.
/// `frozen` (empty or one flag per vertex) marks vertices that never move.
NoneqStep noneq_step(EquippedSystem &system, const NoneqParams &params,
                     Rng &rng, std::span<const char> frozen = {});

struct PolymerConfig {
  std::size_t atoms = 16;
  std::size_t copies = 4;
  double bond = 1.0;          // neighbour spring W
  double bond_spring = 50.0;  // neighbour spring h
  double lj_epsilon = 0.2;
  double lj_sigma = 1.0;
  double lj_cutoff = 2.5;
  double kT = 1.0;
  double atom_radius = 0.3;
  double bead_radius = 1.0;
  double bead_spring = 1.0;   // h_a
  double helix_radius = 0.5;  // initial bead helix
  double helix_turn = 100.0;  // degrees per pair
  bool right_handed = true;
  bool pair_chirality = true;  // base (l, l + 1, bead1, bead2) per pair
  double alpha = 1.0;
  bool flip = false;
  bool fix_last = false;
  std::size_t inner_steps = 0;  // 0 gives 50 * movable vertex count
  std::size_t equilibration = 2000;  // plain sweeps before the directed loop
  std::size_t steps = 200;         // directed jumps
};

/// Reads the PolymerConfig keys of a config file over the defaults. Throws
/// std::invalid_argument on negative counts or unknown keys.
PolymerConfig polymer_config(const KeyValueConfig &cfg);

/// Linear polymer along +z with one bead pair per neighbour pair: bead1 on
/// atom l, bead2 on atom l + 1; the second beads form a helix of the chosen
/// handedness, enforced by 3 bases per window of five consecutive beads.
EquippedSystem build_polymer(const PolymerConfig &config);

struct PolymerRun {
  std::uint64_t seed = 0;
  // Per-jump atom centre-of-mass shifts and rigid rotations of atoms and
  // beads (radians, right-hand rule), both taken along the current
  // first-to-last atom axis.
  double axial_drift = 0.0;
  double twist_angle = 0.0;
  double acceptance_rate = 0.0;
  std::size_t forward = 0;
  std::size_t backward = 0;
  bool in_space = false;
};

PolymerRun run_polymer(const PolymerConfig &config, std::uint64_t seed);

/// Seeds run concurrently on `threads` workers (0: hardware concurrency).
std::vector<PolymerRun> polymer_demo(const PolymerConfig &config,
                                     const std::vector<std::uint64_t> &seeds,
                                     unsigned threads = 0);

}  // namespace qcmc

#endif  // QCMC_MOLECULAR_H_
