//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_RNG_H_
#define QCMC_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

#include "qcmc/vec.h"

namespace qcmc {

/// Deterministic random source used by every simulation in the toolkit.
///
/// The engine is MT19937 seeded with a 32-bit value. Uniform variates map a
/// raw 32-bit output x to x / 2^32, so they lie in [0, 1). Normal variates
/// come from the Box-Muller transform; the sine partner of each pair is cached
/// and returned by the next call. Streams are bit-reproducible for equal seeds.
///
/// An Rng is single-owner state. Independent replicas use seed = base + index.
class Rng {
public:
  static constexpr std::uint32_t kDefaultSeed = 5489u;

  explicit Rng(std::uint32_t seed = kDefaultSeed): engine_(seed) { }

  std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_()); }

  /// Uniform on [0, 1): next_u32() / 2^32.
  double uniform() { return next_u32() * 0x1p-32; }

  /// Uniform integer on [0, n), unbiased by rejection. n must be positive.
  std::size_t below(std::size_t n);

  double standard_normal();

  /// Uniform point of the unit ball in R^dim (dim = 1, 2 or 3), by rejection
  /// from the enclosing cube. Unused coordinates are zero.
  Vec3 unit_ball(int dim);

private:
  std::mt19937 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// Box-Muller transform of two uniforms: (r cos 2πu2, r sin 2πu2) with
/// r = sqrt(-2 ln u1). u1 == 0 is replaced by 2^-32.
std::pair<double, double> box_muller(double u1, double u2);

}  // namespace qcmc

#endif  // QCMC_RNG_H_
