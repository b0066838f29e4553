//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_TABLES_H_
#define QCMC_TABLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcmc/jumpproc.h"

namespace qcmc {

// Reference rows for the N (table 1) and W (table 2) processes.
struct TableRow {
  ProcessKind kind = ProcessKind::N;
  std::size_t copies = 0;
  std::size_t offset = 0;
  double alpha = 0.0;
  std::uint64_t jumps = 0;
  std::uint64_t forward = 0;
  std::uint64_t backward = 0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::optional<double> mean_flips;  // W only
  std::optional<double> r1;          // W only
  double r2 = 0.0;
};

/// Rows of table 1 or 2; throws std::invalid_argument otherwise.
std::span<const TableRow> reference_table(int table);

/// Finds the reference row with the given key, if any.
std::optional<TableRow> find_reference_row(ProcessKind kind, std::size_t copies,
                                           std::size_t offset, double alpha);

ProcessConfig config_for(const TableRow &row);

struct ReproducedRow {
  TableRow reference;
  std::uint64_t jumps = 0;
  std::uint32_t seed = 0;
  JumpStats stats;
  DerivedRatios ratios;
};

struct ReproduceOptions {
  double scale = 0.1;  // jump counts are reference J * scale
  std::uint32_t seed = 1;
  unsigned threads = 0;  // 0 selects hardware concurrency
  double delta = 0.0;    // forwarded to ProcessConfig
};

/// Runs every row of the table as an independent cell (seed + row index).
std::vector<ReproducedRow> reproduce_table(int table,
                                           const ReproduceOptions &options);

// One reference-vs-measured comparison; counts and A, B are compared per 1e7
// jumps, ratios directly.
struct Comparison {
  std::string quantity;
  double reference = 0.0;
  double measured_raw = 0.0;
  double measured = 0.0;  // normalized where applicable
  double tolerance = 0.0;  // relative for counts and A, B; absolute for ratios
  bool within = false;
};

/// Base tolerances (5% on counts, 0.05 on ratios, 8% on A, B) widen by
/// 1/sqrt(scale) when the run is shorter than the reference.
std::vector<Comparison> compare_row(const ReproducedRow &row);

}  // namespace qcmc

#endif  // QCMC_TABLES_H_
