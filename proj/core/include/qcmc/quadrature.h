//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_QUADRATURE_H_
#define QCMC_QUADRATURE_H_

#include <cstddef>
#include <functional>
#include <span>

namespace qcmc {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_intervals = 2000000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b]. The
/// interval is first split at every breakpoint inside (a, b); the interval
/// with the largest error estimate is bisected until the summed estimate
/// meets max(abs_tol, rel_tol * |value|). Nodes never touch interval ends, so
/// integrable endpoint singularities at breakpoints are allowed.
QuadResult integrate(const std::function<double(double)> &f, double a,
                     double b, const QuadOptions &options = {},
                     std::span<const double> breakpoints = {});

}  // namespace qcmc

#endif  // QCMC_QUADRATURE_H_
