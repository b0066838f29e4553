//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/entropy.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcmc/quadrature.h"

namespace qcmc {
namespace {
  double sinc(double x) {
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
  }

  // sin(N t) / sin(t) as the Chebyshev polynomial U_{N-1}(cos t).
  double dirichlet_ratio(int n, double t) {
    const double c = std::cos(t);
    double prev = 1.0;
    double cur = 2.0 * c;
    if (n == 1)
      return prev;
    for (int k = 2; k < n; ++k) {
      const double next = 2.0 * c * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  void check_q(double q) {
    if (!(q >= 1.0) || !std::isfinite(q))
      throw std::invalid_argument("slit model: q must be finite and >= 1");
  }

  std::size_t check_square(const FiniteChain &chain) {
    const std::size_t n = chain.p.size();
    if (n == 0 || chain.mu.size() != n)
      throw std::invalid_argument("chain: p must be S x S with |mu| = S");
    for (const auto &row : chain.p)
      if (row.size() != n)
        throw std::invalid_argument("chain: p must be square");
    return n;
  }
}  // namespace

double slit_intensity_one(double x) {
  const double s = sinc(x);
  return s * s / std::numbers::pi;
}

double slit_intensity_two(double q, double x) {
  const double s = sinc(x);
  const double c = std::cos(q * x);
  return 2.0 * s * s * c * c / std::numbers::pi;
}

double slit_intensity(const SlitModel &model, double x) {
  check_q(model.q);
  if (model.slits == 1)
    return slit_intensity_one(x);
  if (model.slits == 2)
    return slit_intensity_two(model.q, x);
  throw std::invalid_argument(
      "slit_intensity: normalized densities exist for 1 or 2 slits; use "
      "slit_pattern for N = " + std::to_string(model.slits));
}

double slit_pattern(int slits, double q, double y) {
  if (slits < 1)
    throw std::invalid_argument("slit_pattern: slit count must be >= 1");
  check_q(q);
  const double s = sinc(y);
  const double d = dirichlet_ratio(slits, q * y) / slits;
  return s * s * d * d;
}

KlResult kl_continuous(const Density &p, const Density &q, double lo, double hi,
                       std::span<const double> singular_points, double tol,
                       double tail_bound) {
  if (!(tol > 0.0))
    throw std::invalid_argument("kl_continuous: tol must be positive");
  auto integrand = [&](double x) {
    const double px = p(x);
    if (px <= 0.0)
      return 0.0;
    const double qx = q(x);
    return px * (std::log2(px) - std::log2(qx));
  };
  QuadOptions options;
  options.abs_tol = std::max(tol - tail_bound, 0.5 * tol) * 0.5;
  const auto quad = integrate(integrand, lo, hi, options, singular_points);
  KlResult out;
  out.bits = quad.value;
  out.quadrature_error = quad.error;
  out.tail_bound = tail_bound;
  out.half_width = 0.5 * (hi - lo);
  out.intervals = quad.intervals;
  out.converged = quad.converged && std::isfinite(quad.value);
  return out;
}

double slit_kl_tail_bound(double q, double half_width) {
  check_q(q);
  const double period = std::numbers::pi / q;
  return 6.0 / std::numbers::pi *
         (1.0 / half_width + period / (half_width * half_width));
}

double slit_kl_half_width(double q, double bound) {
  check_q(q);
  if (!(bound > 0.0))
    throw std::invalid_argument("slit_kl_half_width: bound must be positive");
  // c X^2 - X - P = 0 with c = bound * pi / 6.
  const double c = bound * std::numbers::pi / 6.0;
  const double period = std::numbers::pi / q;
  return (1.0 + std::sqrt(1.0 + 4.0 * c * period)) / (2.0 * c);
}

KlResult slit_kl(double q, double tol) {
  check_q(q);
  if (!(tol > 0.0))
    throw std::invalid_argument("slit_kl: tol must be positive");
  const double half_width = slit_kl_half_width(q, tol / 10.0);
  const double period = std::numbers::pi / q;
  std::vector<double> zeros;
  const auto last = static_cast<long>(std::floor(half_width / period - 0.5));
  for (long k = -last - 1; k <= last; ++k)
    zeros.push_back((static_cast<double>(k) + 0.5) * period);
  return kl_continuous(slit_intensity_one,
                       [q](double x) { return slit_intensity_two(q, x); },
                       -half_width, half_width, zeros, tol,
                       slit_kl_tail_bound(q, half_width));
}

double kl_discrete(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("kl_discrete: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0 || !std::isfinite(p[i]) ||
        !std::isfinite(q[i]))
      throw std::invalid_argument("kl_discrete: entries must be finite and >= 0");
    if (p[i] == 0.0)
      continue;
    if (q[i] == 0.0)
      throw std::domain_error("kl_discrete: Q(" + std::to_string(i) +
                              ") = 0 while P > 0");
    sum += p[i] * std::log2(p[i] / q[i]);
  }
  return sum;
}

void FiniteChain::validate() const {
  const std::size_t n = check_square(*this);
  double mass = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!(mu[x] >= 0.0))
      throw std::invalid_argument("chain: mu entries must be >= 0");
    mass += mu[x];
    double row = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!(p[x][y] >= 0.0))
        throw std::invalid_argument("chain: p entries must be >= 0");
      row += p[x][y];
      if ((p[x][y] > 0.0) != (p[y][x] > 0.0))
        throw std::domain_error("chain: irreversible pair (" +
                                std::to_string(x) + ", " + std::to_string(y) +
                                ")");
    }
    if (std::abs(row - 1.0) > 1e-12)
      throw std::invalid_argument("chain: row " + std::to_string(x) +
                                  " does not sum to 1");
  }
  if (std::abs(mass - 1.0) > 1e-12)
    throw std::invalid_argument("chain: mu does not sum to 1");
}

double point_flow(const FiniteChain &chain, std::size_t x) {
  const std::size_t n = check_square(chain);
  if (x >= n)
    throw std::out_of_range("point_flow: state out of range");
  double sum = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    const double forward = chain.p[x][y];
    if (forward <= 0.0)
      continue;
    const double back = chain.p[y][x];
    if (back <= 0.0)
      throw std::domain_error("point_flow: irreversible pair");
    sum += forward * std::log(forward / back);
  }
  return sum;
}

EntropyRates entropy_rates(const FiniteChain &chain) {
  chain.validate();
  const std::size_t n = chain.p.size();
  EntropyRates rates;
  for (std::size_t x = 0; x < n; ++x) {
    rates.flow += chain.mu[x] * point_flow(chain, x);
    for (std::size_t y = 0; y < n; ++y) {
      const double out = chain.mu[x] * chain.p[x][y];
      const double in = chain.mu[y] * chain.p[y][x];
      if (out == in)
        continue;
      if (out == 0.0 || in == 0.0) {
        rates.production = INFINITY;
        continue;
      }
      rates.production += 0.5 * (out - in) * std::log(out / in);
    }
  }
  return rates;
}

}  // namespace qcmc
