//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qcmc/bridge.h"

namespace {

// Cholesky factor of the bridge covariance n (K - m) / K^2, n <= m, on
// indices 1 .. K - 1.
std::vector<std::vector<double>> bridge_cholesky(std::size_t k) {
  const std::size_t n = k - 1;
  const double kk = static_cast<double>(k);
  std::vector<std::vector<double>> cov(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double a = static_cast<double>(std::min(i, j) + 1);
      const double b = static_cast<double>(std::max(i, j) + 1);
      cov[i][j] = a * (kk - b) / (kk * kk);
    }
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = cov[i][j];
      for (std::size_t p = 0; p < j; ++p)
        s -= l[i][p] * l[j][p];
      l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
    }
  return l;
}

}  // namespace

TEST_CASE("bridge from normals equals the Cholesky construction") {
  const std::size_t k = 8;
  const auto l = bridge_cholesky(k);
  std::vector<double> z{0.3, -1.2, 0.7, 2.0, -0.4, 0.1, -0.9};
  const auto s = qcmc::levy_bridge_from_normals(k, 1, z);
  CHECK(s.at(0, 0) == 0.0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    double expect = 0.0;
    for (std::size_t j = 0; j <= i; ++j)
      expect += l[i][j] * z[j];
    CHECK(s.at(i + 1, 0) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("levy_step_sigma is the conditional standard deviation") {
  CHECK(qcmc::levy_step_sigma(32, 1) ==
        doctest::Approx(std::sqrt(31.0 / (32.0 * 32.0))));
  CHECK(qcmc::levy_step_sigma(4, 3) == doctest::Approx(std::sqrt(1.0 / 8.0)));
}

TEST_CASE("bridge covariance over many samples") {
  const std::size_t k = 16;
  const int samples = 40000;
  qcmc::Rng rng(17);
  std::vector<double> s2(k, 0.0);
  double cross = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto b = qcmc::levy_bridge(k, 1, rng);
    for (std::size_t n = 0; n < k; ++n)
      s2[n] += b.at(n, 0) * b.at(n, 0);
    cross += b.at(4, 0) * b.at(12, 0);
  }
  CHECK(s2[0] == 0.0);
  for (std::size_t n = 1; n < k; ++n) {
    const double expect = static_cast<double>(n * (k - n)) / (k * k);
    CHECK(s2[n] / samples == doctest::Approx(expect).epsilon(0.05));
  }
  CHECK(cross / samples ==
        doctest::Approx(4.0 * 4.0 / (16.0 * 16.0)).epsilon(0.07));
}

TEST_CASE("bridge coordinates are independent across dimensions") {
  qcmc::Rng rng(2);
  double cross = 0.0;
  const int samples = 20000;
  for (int i = 0; i < samples; ++i) {
    const auto b = qcmc::levy_bridge(8, 3, rng);
    cross += b.at(4, 0) * b.at(4, 2);
  }
  CHECK(std::abs(cross / samples) < 0.01);
}

TEST_CASE("bridge input validation") {
  qcmc::Rng rng;
  CHECK_THROWS_AS(qcmc::levy_bridge(0, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(qcmc::levy_bridge(4, 0, rng), std::invalid_argument);
  std::vector<double> few(2);
  CHECK_THROWS_AS(qcmc::levy_bridge_from_normals(4, 1, few),
                  std::invalid_argument);
  const auto one = qcmc::levy_bridge(1, 2, rng);
  CHECK(one.points == std::vector<double>{0.0, 0.0});
  std::vector<double> off{1.0, 2.0};
  const auto shifted = qcmc::shift_bridge(one, off);
  CHECK(shifted.at(0, 1) == 2.0);
}
