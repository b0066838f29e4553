//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_BRIDGE_H_
#define QCMC_BRIDGE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "qcmc/rng.h"

namespace qcmc {

/// K points in R^d of a discrete Brownian bridge (natural units), stored
/// point-major: coordinate k of point n is points[n * dim + k].
struct BridgeSample {
  std::size_t copies = 0;
  std::size_t dim = 0;
  std::vector<double> points;

  double at(std::size_t n, std::size_t k) const { return points[n * dim + k]; }
  std::span<const double> point(std::size_t n) const {
    return {points.data() + n * dim, dim};
  }
};

/// Standard deviation of the step noise at index n (1 <= n < K):
/// sqrt((K - n) / (K (K - n + 1))).
double levy_step_sigma(std::size_t copies, std::size_t n);

/// Levy construction pinned at points[0] = 0. Throws std::invalid_argument
/// when copies or dim is zero.
BridgeSample levy_bridge(std::size_t copies, std::size_t dim, Rng &rng);

/// Same recurrence driven by explicit noise: normals holds (K - 1) * dim
/// standard-normal values, consumed point-major.
BridgeSample levy_bridge_from_normals(std::size_t copies, std::size_t dim,
                                      std::span<const double> normals);

/// In-place variant used by the jump processes; out must hold K * dim values.
void fill_levy_bridge(std::size_t copies, std::size_t dim, Rng &rng,
                      std::span<double> out);

/// Translates every point by offset; throws on dimension mismatch.
BridgeSample shift_bridge(BridgeSample sample, std::span<const double> offset);

}  // namespace qcmc

#endif  // QCMC_BRIDGE_H_
