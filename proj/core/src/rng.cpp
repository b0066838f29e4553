//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcmc {

std::pair<double, double> box_muller(double u1, double u2) {
  if (u1 <= 0.0)
    u1 = 0x1p-32;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("Rng::below: n must be positive");
  if (n == 1)
    return 0;
  const std::uint64_t range = std::uint64_t{1} << 32;
  const std::uint64_t limit = range - range % n;
  while (true) {
    const std::uint64_t x = next_u32();
    if (x < limit)
      return static_cast<std::size_t>(x % n);
  }
}

double Rng::standard_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const auto [z0, z1] = box_muller(u1, u2);
  cached_normal_ = z1;
  has_cached_ = true;
  return z0;
}

Vec3 Rng::unit_ball(int dim) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("Rng::unit_ball: dim must be 1, 2 or 3");
  while (true) {
    Vec3 v;
    v.x = 2.0 * uniform() - 1.0;
    if (dim >= 2)
      v.y = 2.0 * uniform() - 1.0;
    if (dim >= 3)
      v.z = 2.0 * uniform() - 1.0;
    if (dot(v, v) <= 1.0)
      return v;
  }
}

}  // namespace qcmc
