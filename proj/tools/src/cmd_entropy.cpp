//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <memory>
#include <string>

#include "common.h"
#include "qcmc/entropy.h"
#include "qcmc/numfmt.h"

namespace qcmc::cli {

void add_entropy_commands(CLI::App &app) {
  struct Opts {
    std::string q = "1";
    std::string tol = "1e-3";
  };
  auto o = std::make_shared<Opts>();
  auto *group = app.add_subcommand("entropy", "Relative entropy diagnostics");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand(
      "slit", "KL divergence of the two-slit pattern from the one-slit one");
  cmd->add_option("--q", o->q, "Slit separation parameter (> 0)")
      ->capture_default_str();
  cmd->add_option("--tol", o->tol, "Total error budget in bits")
      ->capture_default_str();
  cmd->callback([o] {
    const double q = parse_value("--q", o->q);
    const double tol = parse_value("--tol", o->tol);
    if (!(q > 0.0) || !(tol > 0.0))
      throw UsageError("--q and --tol must be positive");
    const auto r = slit_kl(q, tol);
    std::cout << "kl_bits " << format_double(r.bits) << '\n'
              << "quadrature_error " << format_double(r.quadrature_error)
              << '\n'
              << "tail_bound " << format_double(r.tail_bound) << '\n'
              << "half_width " << format_double(r.half_width) << '\n'
              << "intervals " << r.intervals << '\n'
              << "converged " << (r.converged ? "yes" : "no") << '\n';
    if (!r.converged)
      throw std::runtime_error("quadrature did not reach the tolerance");
  });
}

}  // namespace qcmc::cli
