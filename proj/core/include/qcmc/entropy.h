//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_ENTROPY_H_
#define QCMC_ENTROPY_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qcmc {

// Fraunhofer slit patterns. x is the reduced screen coordinate and q = d / s
// the ratio of slit spacing to slit width.

/// Single-slit density sin^2 x / (pi x^2); integrates to 1.
double slit_intensity_one(double x);

/// Double-slit density sin^2 x sin^2(2 q x) / (2 pi x^2 sin^2(q x)),
/// evaluated as 2 sinc^2(x) cos^2(q x) / pi; integrates to 1 for q >= 1.
double slit_intensity_two(double q, double x);

struct SlitModel {
  int slits = 2;  // 1 or 2 for the normalized densities
  double q = 1.0;
};

/// Normalized density of a one- or two-slit model; throws otherwise.
double slit_intensity(const SlitModel &model, double x);

/// N-slit pattern relative to its maximum, I(Y) / I0 =
/// sin^2 Y sin^2(N q Y) / (N^2 Y^2 sin^2(q Y)). Not normalized.
double slit_pattern(int slits, double q, double y);

using Density = std::function<double(double)>;

struct KlResult {
  double bits = 0.0;
  double quadrature_error = 0.0;  // estimate on the integration window
  double tail_bound = 0.0;        // caller-supplied bound outside the window
  double half_width = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

/// Integral of p log2(p / q) over [lo, hi], split at `singular_points`.
/// Points where p = 0 contribute 0. Non-convergence is reported through
/// `converged` and the achieved error, not thrown.
KlResult kl_continuous(const Density &p, const Density &q, double lo, double hi,
                       std::span<const double> singular_points, double tol,
                       double tail_bound = 0.0);

/// Rigorous bound on the integral of |I1 log2(I1 / I2)| over |x| > X:
/// (6 / pi)(1 / X + P / X^2) with period P = pi / q.
double slit_kl_tail_bound(double q, double half_width);

/// Smallest X whose tail bound does not exceed `bound`.
double slit_kl_half_width(double q, double bound);

/// D_KL(I1 || I2) in bits on [-X, X] with X from a tail bound of tol / 10,
/// split at every zero of cos(q x) in the window.
KlResult slit_kl(double q, double tol);

/// Discrete relative entropy in bits. Q need not be normalized (column
/// slices of a transition matrix are allowed). Throws std::domain_error when
/// Q(i) = 0 < P(i), std::invalid_argument on length mismatch or negatives.
double kl_discrete(std::span<const double> p, std::span<const double> q);

struct FiniteChain {
  std::vector<std::vector<double>> p;  // row-stochastic
  std::vector<double> mu;

  /// Throws std::invalid_argument on shape, sign or normalization errors
  /// (tolerance 1e-12) and std::domain_error on an irreversible pair.
  void validate() const;
};

struct EntropyRates {
  double production = 0.0;  // R, nats per unit time
  double flow = 0.0;        // A, nats per unit time
};

EntropyRates entropy_rates(const FiniteChain &chain);

/// I(x) = sum_y p(x, y) ln(p(x, y) / p(y, x)), the flow rate of a point mass
/// at x, in nats.
double point_flow(const FiniteChain &chain, std::size_t x);

}  // namespace qcmc

#endif  // QCMC_ENTROPY_H_
