//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdint>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include "common.h"
#include "qcmc/bridge.h"
#include "qcmc/jumpproc.h"
#include "qcmc/numfmt.h"
#include "qcmc/rng.h"
#include "qcmc/tables.h"

namespace qcmc::cli {
namespace {

std::uint32_t seed32(std::uint64_t seed) {
  if (seed > std::numeric_limits<std::uint32_t>::max())
    throw UsageError("--seed must fit in 32 bits");
  return static_cast<std::uint32_t>(seed);
}

std::string optional_cell(const std::optional<double> &v) {
  return v ? format_double(*v) : std::string();
}

void add_rng(CLI::App &app) {
  struct Opts {
    std::uint64_t seed = Rng::kDefaultSeed;
    std::size_t count = 10;
  };
  auto o = std::make_shared<Opts>();
  auto *cmd = app.add_subcommand(
      "rng-selftest", "Print the first raw 32-bit outputs for a seed");
  cmd->add_option("--seed", o->seed, "Generator seed")->capture_default_str();
  cmd->add_option("--count", o->count, "Number of outputs")
      ->capture_default_str();
  cmd->callback([o] {
    Rng rng(seed32(o->seed));
    for (std::size_t i = 0; i < o->count; ++i)
      std::cout << rng.next_u32() << '\n';
  });
}

void add_bridge(CLI::App &app) {
  struct Opts {
    std::size_t copies = 32;
    std::size_t dim = 1;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    std::string out = "-";
  };
  auto o = std::make_shared<Opts>();
  auto *group = app.add_subcommand("bridge", "Levy bridge sampling");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand("sample", "Emit Levy bridges as CSV");
  cmd->add_option("--K", o->copies, "Points per bridge")->capture_default_str();
  cmd->add_option("--d", o->dim, "Dimension")->capture_default_str();
  cmd->add_option("--seed", o->seed, "Generator seed")->capture_default_str();
  cmd->add_option("--count", o->count, "Number of bridges")
      ->capture_default_str();
  cmd->add_option("--out", o->out, "CSV path or - for stdout")
      ->capture_default_str();
  cmd->callback([o] {
    if (o->copies < 1 || o->dim < 1)
      throw UsageError("--K and --d must be positive");
    Rng rng(seed32(o->seed));
    std::ostringstream csv;
    csv << "bridge,n";
    for (std::size_t k = 0; k < o->dim; ++k)
      csv << ",x" << k;
    csv << '\n';
    for (std::size_t i = 0; i < o->count; ++i) {
      const auto sample = levy_bridge(o->copies, o->dim, rng);
      for (std::size_t n = 0; n < o->copies; ++n) {
        csv << i << ',' << n;
        for (std::size_t k = 0; k < o->dim; ++k)
          csv << ',' << format_double(sample.at(n, k));
        csv << '\n';
      }
    }
    write_file(o->out, csv.str());
    write_manifest(o->out, "bridge sample",
                   {{"K", o->copies}, {"d", o->dim}, {"count", o->count}},
                   {o->seed}, {o->out});
  });
}

void add_process(CLI::App &app) {
  struct Opts {
    std::string kind = "W";
    std::size_t copies = 32;
    std::size_t offset = 2;
    bool pair_mode = false;
    std::string alpha = "2/3";
    std::uint64_t jumps = 1000000;
    std::uint64_t seed = 1;
    std::string delta = "0";
    std::size_t dim = 1;
    std::string out = "-";
  };
  auto o = std::make_shared<Opts>();
  auto *group = app.add_subcommand("process", "Directed jump processes");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand("run", "Run one process and emit counts");
  cmd->add_option("--kind", o->kind, "N (bridge regeneration) or W (ring)")
      ->check(CLI::IsMember({"N", "W"}))
      ->capture_default_str();
  cmd->add_option("--K", o->copies, "Copies per particle")->capture_default_str();
  cmd->add_option("--j", o->offset, "Copy offset n2 = n1 + j")
      ->capture_default_str();
  cmd->add_flag("--pair-mode", o->pair_mode,
                "Uniform pair n1 < n2 instead of the fixed offset (N only)");
  cmd->add_option("--alpha", o->alpha, "Forward probability (number or p/q)")
      ->capture_default_str();
  cmd->add_option("--jumps", o->jumps, "Number of jumps J")->capture_default_str();
  cmd->add_option("--seed", o->seed, "Generator seed")->capture_default_str();
  cmd->add_option("--delta", o->delta,
                  "Initial separation; 0 selects 1e4 K")
      ->capture_default_str();
  cmd->add_option("--dim", o->dim, "Particle dimension")->capture_default_str();
  cmd->add_option("--out", o->out, "CSV path or - for stdout")
      ->capture_default_str();
  cmd->callback([o] {
    ProcessConfig config;
    config.kind = o->kind == "N" ? ProcessKind::N : ProcessKind::W;
    config.pair_mode = o->pair_mode;
    config.copies = o->copies;
    config.offset = o->offset;
    config.alpha = parse_value("--alpha", o->alpha);
    config.delta = parse_value("--delta", o->delta);
    config.dim = o->dim;
    try {
      config.validate();
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    const auto stats = run_process(config, o->jumps, seed32(o->seed));
    const auto ratios = derived_ratios(stats, config);
    std::ostringstream csv;
    csv << "K,j,alpha,J,F,R,A,B,C,r1,r2\n";
    csv << config.copies << ',' << config.offset << ','
        << format_double(config.alpha) << ',' << stats.jumps << ','
        << stats.forward << ',' << stats.backward << ','
        << format_double(stats.mean_a) << ',' << format_double(stats.mean_b)
        << ',' << format_double(stats.mean_flips()) << ','
        << optional_cell(ratios.r1) << ',' << optional_cell(ratios.r2) << '\n';
    write_file(o->out, csv.str());
    write_manifest(o->out, "process run",
                   {{"kind", o->kind},
                    {"K", o->copies},
                    {"j", o->offset},
                    {"pair_mode", o->pair_mode},
                    {"alpha", o->alpha},
                    {"jumps", o->jumps},
                    {"delta", o->delta},
                    {"dim", o->dim}},
                   {o->seed}, {o->out});
  });
}

void add_table(CLI::App &app) {
  struct Opts {
    int table = 2;
    double scale = 0.1;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string delta = "0";
    std::string out = "-";
    std::string report;
  };
  auto o = std::make_shared<Opts>();
  auto *group = app.add_subcommand("table", "Reference count tables");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand(
      "reproduce", "Re-run every row of a reference table at scaled J");
  cmd->add_option("--table", o->table, "1 (process N) or 2 (process W)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  cmd->add_option("--scale", o->scale, "Jump-count scale factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", o->seed, "Base seed; row i uses seed + i")
      ->capture_default_str();
  cmd->add_option("--threads", o->threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  cmd->add_option("--delta", o->delta, "Initial separation; 0 selects 1e4 K")
      ->capture_default_str();
  cmd->add_option("--out", o->out, "CSV path or - for stdout")
      ->capture_default_str();
  cmd->add_option("--report", o->report,
                  "Optional CSV comparing each row with the reference");
  cmd->callback([o] {
    ReproduceOptions options;
    options.scale = o->scale;
    options.seed = seed32(o->seed);
    options.threads = o->threads;
    options.delta = parse_value("--delta", o->delta);
    const auto rows = reproduce_table(o->table, options);
    const bool two = o->table == 2;
    std::ostringstream csv;
    csv << (two ? "K,j,alpha,J,F,R,A,B,C,r1,r2\n" : "K,j,alpha,J,F,R,A,B,r2\n");
    for (const auto &row : rows) {
      const auto &ref = row.reference;
      csv << ref.copies << ',' << ref.offset << ',' << format_double(ref.alpha)
          << ',' << row.jumps << ',' << row.stats.forward << ','
          << row.stats.backward << ',' << format_double(row.stats.mean_a) << ','
          << format_double(row.stats.mean_b) << ',';
      if (two)
        csv << format_double(row.stats.mean_flips()) << ','
            << optional_cell(row.ratios.r1) << ',';
      csv << optional_cell(row.ratios.r2) << '\n';
    }
    write_file(o->out, csv.str());
    std::vector<std::string> outputs{o->out};
    if (!o->report.empty()) {
      std::ostringstream rep;
      rep << "K,j,alpha,quantity,reference,measured,tolerance,within\n";
      for (const auto &row : rows)
        for (const auto &c : compare_row(row))
          rep << row.reference.copies << ',' << row.reference.offset << ','
              << format_double(row.reference.alpha) << ',' << c.quantity << ','
              << format_double(c.reference) << ',' << format_double(c.measured)
              << ',' << format_double(c.tolerance) << ','
              << (c.within ? 1 : 0) << '\n';
      write_file(o->report, rep.str());
      outputs.push_back(o->report);
    }
    write_manifest(o->out, "table reproduce",
                   {{"table", o->table},
                    {"scale", o->scale},
                    {"threads", o->threads},
                    {"delta", o->delta}},
                   {o->seed}, outputs);
  });
}

}  // namespace

void add_process_commands(CLI::App &app) {
  add_rng(app);
  add_bridge(app);
  add_process(app);
  add_table(app);
}

}  // namespace qcmc::cli
