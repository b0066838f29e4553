//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/bridge.h"

#include <cmath>
#include <stdexcept>

namespace qcmc {
namespace {
  void check_shape(std::size_t copies, std::size_t dim) {
    if (copies == 0)
      throw std::invalid_argument("levy_bridge: copy count must be >= 1");
    if (dim == 0)
      throw std::invalid_argument("levy_bridge: dimension must be >= 1");
  }

  template <class NoiseFn>
  void levy_recurrence(std::size_t copies, std::size_t dim, double *out,
                       NoiseFn &&noise) {
    for (std::size_t k = 0; k < dim; ++k)
      out[k] = 0.0;
    const double kk = static_cast<double>(copies);
    for (std::size_t n = 1; n < copies; ++n) {
      const double rest = kk - static_cast<double>(n);
      const double shrink = rest / (rest + 1.0);
      const double sigma = std::sqrt(rest / (kk * (rest + 1.0)));
      const double *prev = out + (n - 1) * dim;
      double *cur = out + n * dim;
      for (std::size_t k = 0; k < dim; ++k)
        cur[k] = shrink * prev[k] + sigma * noise();
    }
  }
}  // namespace

double levy_step_sigma(std::size_t copies, std::size_t n) {
  const double kk = static_cast<double>(copies);
  const double rest = kk - static_cast<double>(n);
  return std::sqrt(rest / (kk * (rest + 1.0)));
}

void fill_levy_bridge(std::size_t copies, std::size_t dim, Rng &rng,
                      std::span<double> out) {
  check_shape(copies, dim);
  if (out.size() != copies * dim)
    throw std::invalid_argument("fill_levy_bridge: output size mismatch");
  levy_recurrence(copies, dim, out.data(),
                  [&rng] { return rng.standard_normal(); });
}

BridgeSample levy_bridge(std::size_t copies, std::size_t dim, Rng &rng) {
  check_shape(copies, dim);
  BridgeSample s{copies, dim, std::vector<double>(copies * dim)};
  fill_levy_bridge(copies, dim, rng, s.points);
  return s;
}

BridgeSample levy_bridge_from_normals(std::size_t copies, std::size_t dim,
                                      std::span<const double> normals) {
  check_shape(copies, dim);
  if (normals.size() != (copies - 1) * dim)
    throw std::invalid_argument(
        "levy_bridge_from_normals: need (K - 1) * d normals");
  BridgeSample s{copies, dim, std::vector<double>(copies * dim)};
  std::size_t next = 0;
  levy_recurrence(copies, dim, s.points.data(),
                  [&] { return normals[next++]; });
  return s;
}

BridgeSample shift_bridge(BridgeSample sample, std::span<const double> offset) {
  if (offset.size() != sample.dim)
    throw std::invalid_argument("shift_bridge: offset dimension mismatch");
  for (std::size_t n = 0; n < sample.copies; ++n)
    for (std::size_t k = 0; k < sample.dim; ++k)
      sample.points[n * sample.dim + k] += offset[k];
  return sample;
}

}  // namespace qcmc
