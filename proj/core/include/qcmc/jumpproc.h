//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_JUMPPROC_H_
#define QCMC_JUMPPROC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qcmc/rng.h"

namespace qcmc {

// Two distinguishable free quantum particles, each represented by K ring
// copies. Every jump compares the particle separation at two copy indices
// and moves the system so that, with probability alpha, the copies of
// particle a that sit closer to b and the copies of b that sit farther from a
// are favoured ("forward" jumps). alpha = 1/2 is the undirected reference
// process.
//
// kind N replaces both copy arrays by fresh Levy bridges pinned at the chosen
// indices; kind W heat-bath resamples one copy of each particle on the ring.

enum class ProcessKind { N, W };

const char *to_string(ProcessKind kind);

struct ProcessConfig {
  ProcessKind kind = ProcessKind::W;
  bool pair_mode = false;    // uniform pair n1 < n2 instead of n2 = n1 + j
  std::size_t copies = 32;   // K
  std::size_t offset = 2;    // j; also used for the C_n bookkeeping
  double alpha = 2.0 / 3.0;  // forward probability, in [1/2, 1]
  double delta = 0.0;        // initial separation; <= 0 selects 1e4 K
  std::size_t dim = 1;

  double separation() const {
    return delta > 0.0 ? delta : 1e4 * static_cast<double>(copies);
  }

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct JumpRecord {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  bool forward = true;
  bool flipped = false;  // sign of d(n1) - d(n2) differs before vs after
};

struct JumpStats {
  std::uint64_t jumps = 0;     // J
  std::uint64_t forward = 0;   // F: forward jumps that flipped the sign
  std::uint64_t backward = 0;  // R: backward jumps that flipped the sign
  double mean_a = 0.0;         // A
  double mean_b = 0.0;         // B, relative to the initial separation
  std::vector<std::uint64_t> flips_per_copy;  // C_n

  /// Mean of C_n over copies.
  double mean_flips() const;
};

class JumpProcess {
public:
  /// Initial sample a = 0, b = (delta, 0, ...); statistics zeroed.
  explicit JumpProcess(const ProcessConfig &config);

  const ProcessConfig &config() const { return config_; }

  std::pair<std::size_t, std::size_t> choose_positions(Rng &rng) const;

  JumpRecord step(Rng &rng);
  JumpRecord step_n(Rng &rng);
  /// Throws std::logic_error in pair mode.
  JumpRecord step_w(Rng &rng);

  /// Statistics with A and B evaluated on the current state.
  JumpStats stats() const;

  std::span<const double> a() const { return a_; }
  std::span<const double> b() const { return b_; }
  double separation_at(std::size_t n) const { return dist_[n]; }

private:
  double copy_distance(std::size_t n) const;
  bool closer(std::size_t n, std::size_t m) const {
    return dist_[n] <= dist_[m];
  }
  void record(JumpRecord &rec, bool before_less);
  void resample(std::vector<double> &x, std::size_t n, Rng &rng);

  ProcessConfig config_;
  std::size_t dim_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> dist_;
  std::vector<double> bridge_a_;
  std::vector<double> bridge_b_;
  std::vector<char> order_before_;
  JumpStats stats_;
};

/// Heat-bath value of a ring coordinate: midpoint of its neighbours plus
/// sigma * eta, with sigma = 1 / sqrt(2 K) in natural units.
inline double heat_bath_value(double prev, double next, double sigma,
                              double eta) {
  return 0.5 * (prev + next) + sigma * eta;
}

/// Runs `jumps` jumps from the initial sample with Rng(seed).
JumpStats run_process(const ProcessConfig &config, std::uint64_t jumps,
                      std::uint32_t seed);

struct DerivedRatios {
  std::optional<double> r1;  // (A + B) K sqrt(K) / (F - R)
  std::optional<double> r2;  // (A + B) J / ((F - R) C), with J / C = 2 for N
};

/// Both ratios are empty when F == R; r2 is also empty for W when C == 0.
DerivedRatios derived_ratios(const JumpStats &stats,
                             const ProcessConfig &config);

}  // namespace qcmc

#endif  // QCMC_JUMPPROC_H_
