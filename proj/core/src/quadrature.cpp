//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/quadrature.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qcmc {
namespace {
  // Kronrod nodes on [0, 1) of the 21-point rule; odd indices are the
  // embedded 10-point Gauss nodes.
  constexpr double kNodes[11] = {
      0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
      0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
      0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
      0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
      0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
      0.0};
  constexpr double kKronrod[11] = {
      0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
      0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
      0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
      0.123491976262065851077600525478651, 0.134709217311473325928054001771707,
      0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
      0.149445554002916905664936468389821};
  constexpr double kGauss[5] = {
      0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
      0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
      0.295524224714752870173892994651338};

  struct Piece {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Piece &o) const { return error < o.error; }
  };

  Piece gk21(const std::function<double(double)> &f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrod[10];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    double fv1[10];
    double fv2[10];
    for (int i = 0; i < 10; ++i) {
      const double dx = half * kNodes[i];
      fv1[i] = f(center - dx);
      fv2[i] = f(center + dx);
      const double pair = fv1[i] + fv2[i];
      kronrod += kKronrod[i] * pair;
      abs_sum += kKronrod[i] * (std::abs(fv1[i]) + std::abs(fv2[i]));
      if (i % 2 == 1)
        gauss += kGauss[i / 2] * pair;
    }
    const double mean = 0.5 * kronrod;
    double asc = kKronrod[10] * std::abs(fc - mean);
    for (int i = 0; i < 10; ++i)
      asc += kKronrod[i] * (std::abs(fv1[i] - mean) + std::abs(fv2[i] - mean));

    const double scale = std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    asc *= scale;
    abs_sum *= scale;
    if (asc != 0.0 && err != 0.0)
      err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps))
      err = std::max(50.0 * eps * abs_sum, err);
    return {a, b, kronrod * half, err};
  }
}  // namespace

QuadResult integrate(const std::function<double(double)> &f, double a,
                     double b, const QuadOptions &options,
                     std::span<const double> breakpoints) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate: limits must be finite");
  QuadResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  const double sign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double p : breakpoints)
    if (p > lo && p < hi)
      cuts.push_back(p);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> initial;
  initial.reserve(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    initial.push_back(gk21(f, cuts[i], cuts[i + 1]));
  result.evaluations = 21 * initial.size();
  // Max-heap on the error estimate.
  std::vector<Piece> heap = std::move(initial);
  std::make_heap(heap.begin(), heap.end());

  auto totals = [&heap] {
    // Periodic exact resummation keeps the running totals from drifting.
    double value = 0.0;
    double error = 0.0;
    for (const auto &piece : heap) {
      value += piece.value;
      error += piece.error;
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  std::size_t since_resum = 0;
  while (true) {
    const double target =
        std::max(options.abs_tol, options.rel_tol * std::abs(value));
    if (error <= target) {
      result.converged = true;
      break;
    }
    if (heap.size() >= options.max_intervals)
      break;
    const Piece worst = heap.front();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      break;  // interval exhausted at machine precision
    std::pop_heap(heap.begin(), heap.end());
    heap.pop_back();
    const Piece left = gk21(f, worst.a, mid);
    const Piece right = gk21(f, mid, worst.b);
    result.evaluations += 42;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    if (++since_resum == 4096) {
      std::tie(value, error) = totals();
      since_resum = 0;
    }
  }
  std::tie(value, error) = totals();
  result.value = sign * value;
  result.error = error;
  result.intervals = heap.size();
  return result;
}

}  // namespace qcmc
