//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/jumpproc.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qcmc/bridge.h"

namespace qcmc {

const char *to_string(ProcessKind kind) {
  return kind == ProcessKind::N ? "N" : "W";
}

void ProcessConfig::validate() const {
  if (copies < 2)
    throw std::invalid_argument("process: K must be >= 2");
  if (offset == 0 || offset >= copies)
    throw std::invalid_argument("process: j must satisfy 0 < j < K (got j=" +
                                std::to_string(offset) + ", K=" +
                                std::to_string(copies) + ")");
  if (!(alpha >= 0.5 && alpha <= 1.0))
    throw std::invalid_argument("process: alpha must lie in [1/2, 1]");
  if (dim == 0)
    throw std::invalid_argument("process: dimension must be >= 1");
  if (!std::isfinite(delta))
    throw std::invalid_argument("process: delta must be finite");
  if (kind == ProcessKind::W && pair_mode)
    throw std::invalid_argument("process: W is defined for offset mode only");
}

double JumpStats::mean_flips() const {
  if (flips_per_copy.empty())
    return 0.0;
  const auto total = std::accumulate(flips_per_copy.begin(),
                                     flips_per_copy.end(), std::uint64_t{0});
  return static_cast<double>(total) /
         static_cast<double>(flips_per_copy.size());
}

JumpProcess::JumpProcess(const ProcessConfig &config)
    : config_(config), dim_(config.dim) {
  config_.validate();
  const std::size_t k = config_.copies;
  a_.assign(k * dim_, 0.0);
  b_.assign(k * dim_, 0.0);
  for (std::size_t n = 0; n < k; ++n)
    b_[n * dim_] = config_.separation();
  dist_.resize(k);
  for (std::size_t n = 0; n < k; ++n)
    dist_[n] = copy_distance(n);
  bridge_a_.resize(k * dim_);
  bridge_b_.resize(k * dim_);
  order_before_.resize(k);
  stats_.flips_per_copy.assign(k, 0);
}

double JumpProcess::copy_distance(std::size_t n) const {
  if (dim_ == 1)
    return std::abs(a_[n] - b_[n]);
  double s = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = a_[n * dim_ + k] - b_[n * dim_ + k];
    s += d * d;
  }
  return std::sqrt(s);
}

std::pair<std::size_t, std::size_t>
JumpProcess::choose_positions(Rng &rng) const {
  const std::size_t k = config_.copies;
  if (config_.pair_mode) {
    const std::size_t first = rng.below(k);
    std::size_t second = rng.below(k - 1);
    if (second >= first)
      ++second;
    return std::minmax(first, second);
  }
  const std::size_t n1 = rng.below(k);
  return {n1, (n1 + config_.offset) % k};
}

void JumpProcess::record(JumpRecord &rec, bool before_less) {
  rec.flipped = before_less != closer(rec.n1, rec.n2);
  ++stats_.jumps;
  if (rec.flipped)
    ++(rec.forward ? stats_.forward : stats_.backward);
}

JumpRecord JumpProcess::step(Rng &rng) {
  return config_.kind == ProcessKind::N ? step_n(rng) : step_w(rng);
}

JumpRecord JumpProcess::step_n(Rng &rng) {
  const std::size_t k = config_.copies;
  const std::size_t j = config_.offset;
  JumpRecord rec;
  std::tie(rec.n1, rec.n2) = choose_positions(rng);
  const bool less = closer(rec.n1, rec.n2);
  rec.forward = rng.uniform() < config_.alpha;

  // Forward jumps pin a where the pair is closer and b where it is farther.
  const std::size_t near = less ? rec.n1 : rec.n2;
  const std::size_t far = less ? rec.n2 : rec.n1;
  const std::size_t pin_a = rec.forward ? near : far;
  const std::size_t pin_b = rec.forward ? far : near;

  for (std::size_t n = 0; n < k; ++n)
    order_before_[n] = closer(n, (n + j) % k);

  fill_levy_bridge(k, dim_, rng, bridge_a_);
  fill_levy_bridge(k, dim_, rng, bridge_b_);
  for (std::size_t c = 0; c < dim_; ++c) {
    const double shift_a = a_[pin_a * dim_ + c] - bridge_a_[pin_a * dim_ + c];
    const double shift_b = b_[pin_b * dim_ + c] - bridge_b_[pin_b * dim_ + c];
    const double keep_a = a_[pin_a * dim_ + c];
    const double keep_b = b_[pin_b * dim_ + c];
    for (std::size_t n = 0; n < k; ++n) {
      a_[n * dim_ + c] = bridge_a_[n * dim_ + c] + shift_a;
      b_[n * dim_ + c] = bridge_b_[n * dim_ + c] + shift_b;
    }
    a_[pin_a * dim_ + c] = keep_a;
    b_[pin_b * dim_ + c] = keep_b;
  }
  for (std::size_t n = 0; n < k; ++n)
    dist_[n] = copy_distance(n);

  record(rec, less);
  for (std::size_t n = 0; n < k; ++n)
    if (order_before_[n] != static_cast<char>(closer(n, (n + j) % k)))
      ++stats_.flips_per_copy[n];
  return rec;
}

void JumpProcess::resample(std::vector<double> &x, std::size_t n, Rng &rng) {
  const std::size_t k = config_.copies;
  const std::size_t prev = (n + k - 1) % k;
  const std::size_t next = (n + 1) % k;
  const double sigma = 1.0 / std::sqrt(2.0 * static_cast<double>(k));
  for (std::size_t c = 0; c < dim_; ++c)
    x[n * dim_ + c] = heat_bath_value(x[prev * dim_ + c], x[next * dim_ + c],
                                      sigma, rng.standard_normal());
}

JumpRecord JumpProcess::step_w(Rng &rng) {
  if (config_.pair_mode)
    throw std::logic_error("step_w: W process requires offset mode");
  const std::size_t k = config_.copies;
  const std::size_t j = config_.offset;
  JumpRecord rec;
  std::tie(rec.n1, rec.n2) = choose_positions(rng);
  const bool less = closer(rec.n1, rec.n2);
  rec.forward = rng.uniform() < config_.alpha;

  // Forward jumps resample a where the pair is farther and b where closer.
  const std::size_t near = less ? rec.n1 : rec.n2;
  const std::size_t far = less ? rec.n2 : rec.n1;
  const std::size_t move_a = rec.forward ? far : near;
  const std::size_t move_b = rec.forward ? near : far;

  // Sign pairs (n, n + j) that see a changed coordinate.
  std::array<std::size_t, 4> touched{move_a, (move_a + k - j) % k, move_b,
                                     (move_b + k - j) % k};
  std::sort(touched.begin(), touched.end());
  const auto end = std::unique(touched.begin(), touched.end());
  for (auto it = touched.begin(); it != end; ++it)
    order_before_[*it] = closer(*it, (*it + j) % k);

  resample(a_, move_a, rng);
  resample(b_, move_b, rng);
  dist_[move_a] = copy_distance(move_a);
  dist_[move_b] = copy_distance(move_b);

  record(rec, less);
  for (auto it = touched.begin(); it != end; ++it)
    if (order_before_[*it] != static_cast<char>(closer(*it, (*it + j) % k)))
      ++stats_.flips_per_copy[*it];
  return rec;
}

JumpStats JumpProcess::stats() const {
  JumpStats s = stats_;
  const std::size_t k = config_.copies;
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t n = 0; n < k; ++n) {
    sa += a_[n * dim_];
    sb += b_[n * dim_] - config_.separation();
  }
  s.mean_a = sa / static_cast<double>(k);
  s.mean_b = sb / static_cast<double>(k);
  return s;
}

JumpStats run_process(const ProcessConfig &config, std::uint64_t jumps,
                      std::uint32_t seed) {
  JumpProcess process(config);
  Rng rng(seed);
  if (config.kind == ProcessKind::N) {
    for (std::uint64_t i = 0; i < jumps; ++i)
      process.step_n(rng);
  } else {
    for (std::uint64_t i = 0; i < jumps; ++i)
      process.step_w(rng);
  }
  return process.stats();
}

DerivedRatios derived_ratios(const JumpStats &stats,
                             const ProcessConfig &config) {
  DerivedRatios out;
  if (stats.forward == stats.backward)
    return out;
  const double net = static_cast<double>(stats.forward) -
                     static_cast<double>(stats.backward);
  const double sum = stats.mean_a + stats.mean_b;
  const double k = static_cast<double>(config.copies);
  out.r1 = sum * k * std::sqrt(k) / net;
  // J / C is fixed at 2 for N; W uses the measured C.
  const double jumps_per_flip =
      config.kind == ProcessKind::N
          ? 2.0
          : (stats.mean_flips() > 0.0
                 ? static_cast<double>(stats.jumps) / stats.mean_flips()
                 : 0.0);
  if (jumps_per_flip > 0.0)
    out.r2 = sum * jumps_per_flip / net;
  return out;
}

}  // namespace qcmc
