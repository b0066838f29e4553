//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/tables.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qcmc {
namespace {
  constexpr double k23 = 2.0 / 3.0;
  constexpr double k712 = 7.0 / 12.0;
  constexpr double k1324 = 13.0 / 24.0;
  constexpr double k2548 = 25.0 / 48.0;

  TableRow n_row(std::size_t k, std::size_t j, double alpha, std::uint64_t jumps,
                 std::uint64_t f, std::uint64_t r, double a, double b,
                 double r2) {
    return {ProcessKind::N, k, j, alpha, jumps, f, r, a, b,
            std::nullopt, std::nullopt, r2};
  }

  TableRow w_row(std::size_t k, std::size_t j, double alpha, std::uint64_t jumps,
                 std::uint64_t f, std::uint64_t r, double a, double b, double c,
                 double r1, double r2) {
    return {ProcessKind::W, k, j, alpha, jumps, f, r, a, b, c, r1, r2};
  }

  const std::vector<TableRow> &table_one() {
    static const std::vector<TableRow> rows = {
        n_row(8, 2, 1.0, 10000000, 5002391, 0, 1.2212e6, 1.2242e6, 0.9778),
        n_row(8, 2, k23, 10005000, 3336249, 1668173, 4.0719e5, 4.0778e5, 0.9773),
        n_row(8, 2, k712, 10000000, 2919143, 2081936, 2.0472e5, 2.0419e5, 0.9768),
        n_row(8, 2, k1324, 20000000, 5415950, 4583516, 2.0225e5, 2.0394e5, 0.9758),
        n_row(8, 2, k2548, 20000000, 5205748, 4792723, 1.0111e5, 9.7748e4, 0.9629),
        n_row(16, 1, k23, 10000000, 3331214, 1667291, 2.2680e5, 2.2837e5, 0.5471),
        n_row(16, 2, k23, 10000000, 3333718, 1666593, 3.1050e5, 3.1231e5, 0.7470),
        n_row(16, 4, k23, 10000000, 3332375, 1668024, 4.0726e5, 4.0487e5, 0.9763),
        n_row(16, 8, k23, 10000000, 3332983, 1667959, 4.7057e5, 4.6881e5, 1.129),
        n_row(32, 1, k23, 10000000, 3333992, 1665310, 1.6566e5, 1.6342e5, 0.3946),
        n_row(32, 2, k23, 10000000, 3334183, 1666927, 2.2823e5, 2.2691e5, 0.5461),
        n_row(32, 4, k23, 10000000, 3335290, 1664622, 3.1246e5, 3.1090e5, 0.7460),
        n_row(32, 8, k23, 10000000, 3334115, 1665497, 4.0766e5, 4.0893e5, 0.9788),
        n_row(64, 2, k23, 10000000, 3333389, 1665903, 1.6270e5, 1.6609e5, 0.3944),
        n_row(64, 8, k23, 10000000, 3334884, 1667409, 3.1174e5, 3.1077e5, 0.7465),
        n_row(64, 16, k23, 10000000, 3333361, 1665149, 4.0878e5, 4.0681e5, 0.9783),
    };
    return rows;
  }

  const std::vector<TableRow> &table_two() {
    static const std::vector<TableRow> rows = {
        w_row(16, 1, k23, 10000000, 2294496, 1153377, 1.5090e4, 1.5224e4, 512272, 1.700, 0.5187),
        w_row(16, 2, k23, 10000000, 1642125, 827546, 1.1095e4, 1.1140e4, 369874, 1.747, 0.7381),
        w_row(16, 4, k23, 10000000, 1243440, 631437, 8.4986e3, 8.5709e3, 282097, 1.785, 0.9887),
        w_row(32, 1, k23, 10000000, 2251225, 1130260, 5.2767e3, 5.2874e3, 251470, 1.706, 0.3748),
        w_row(32, 2, k23, 10000000, 1580763, 798450, 3.7948e3, 3.7869e3, 178242, 1.754, 0.5436),
        w_row(32, 3, k23, 10000000, 1307517, 663010, 3.1831e3, 3.1756e3, 148053, 1.786, 0.6665),
        w_row(32, 4, k23, 10000000, 1138660, 582221, 2.7568e3, 2.7539e3, 129549, 1.792, 0.7644),
        w_row(32, 5, k23, 10000000, 1042861, 534477, 2.5251e3, 2.5549e3, 118876, 1.809, 0.8405),
        w_row(32, 6, k23, 10000000, 967434, 495375, 2.3921e3, 2.3670e3, 110380, 1.825, 0.9131),
        w_row(32, 7, k23, 10000000, 911386, 467753, 2.2203e3, 2.2288e3, 104017, 1.815, 0.9644),
        w_row(32, 8, k23, 10000000, 874623, 449650, 2.1260e3, 2.1291e3, 100035, 1.812, 1.001),
        w_row(32, 9, k23, 12000000, 1024333, 527608, 2.5445e3, 2.5039e3, 117076, 1.840, 1.041),
        w_row(32, 10, k23, 11000000, 911136, 470663, 2.2247e3, 2.2062e3, 104318, 1.821, 1.061),
        w_row(32, 11, k23, 14000000, 1142519, 589629, 2.7743e3, 2.7949e3, 130899, 1.823, 1.077),
        w_row(32, 12, k23, 11000000, 874736, 453702, 2.1478e3, 2.1269e3, 100289, 1.838, 1.114),
        w_row(32, 13, k23, 14000000, 1102885, 571297, 2.7163e3, 2.7051e3, 126588, 1.846, 1.128),
        w_row(32, 14, k23, 12000000, 938220, 487280, 2.2964e3, 2.2897e3, 107856, 1.841, 1.131),
        w_row(32, 15, k23, 14000000, 1086256, 568979, 2.6827e3, 2.6788e3, 125154, 1.876, 1.159),
        w_row(32, 1, 1.0, 10000000, 3332721, 0, 1.5819e4, 1.5825e4, 247677, 1.719, 0.3834),
        w_row(32, 2, 1.0, 10000000, 2369493, 0, 1.1341e4, 1.1354e4, 179076, 1.734, 0.5347),
        w_row(32, 2, k712, 10000000, 1381226, 991383, 1.9456e3, 1.8973e3, 178013, 1.785, 0.5536),
        w_row(32, 2, k1324, 20000000, 2573137, 2181102, 1.9085e3, 1.9266e3, 356466, 1.771, 0.5491),
        w_row(32, 2, k2548, 40000000, 4950753, 4559821, 1.9429e3, 1.8834e3, 712677, 1.772, 0.5496),
        w_row(64, 1, k23, 10000000, 2233592, 1123461, 1.8555e3, 1.8491e3, 124756, 1.708, 0.2675),
        w_row(64, 2, k23, 20000000, 3102155, 1571597, 2.6385e3, 2.6427e3, 175391, 1.767, 0.3935),
        w_row(64, 4, k23, 20000000, 2208690, 1127635, 1.9124e3, 1.9001e3, 125776, 1.806, 0.5610),
        w_row(64, 8, k23, 22000000, 1782288, 917200, 1.5424e3, 1.5407e3, 101851, 1.825, 0.7699),
        w_row(64, 16, k23, 30000000, 1909428, 988772, 1.6775e3, 1.6584e3, 109624, 1.855, 0.9917),
        w_row(64, 24, k23, 25000000, 1450673, 755564, 1.2598e3, 1.2479e3, 83414, 1.847, 1.081),
        w_row(128, 1, k23, 10000000, 2221748, 1119251, 6.5420e2, 6.5077e2, 62092, 1.714, 0.1906),
        w_row(128, 16, k23, 10000000, 573255, 297429, 1.7767e2, 1.7490e2, 16466, 1.851, 0.7764),
    };
    return rows;
  }
}  // namespace

std::span<const TableRow> reference_table(int table) {
  if (table == 1)
    return table_one();
  if (table == 2)
    return table_two();
  throw std::invalid_argument("reference_table: table must be 1 or 2");
}

std::optional<TableRow> find_reference_row(ProcessKind kind, std::size_t copies,
                                           std::size_t offset, double alpha) {
  for (const auto &row : reference_table(kind == ProcessKind::N ? 1 : 2))
    if (row.copies == copies && row.offset == offset &&
        std::abs(row.alpha - alpha) < 1e-3)
      return row;
  return std::nullopt;
}

ProcessConfig config_for(const TableRow &row) {
  ProcessConfig config;
  config.kind = row.kind;
  config.copies = row.copies;
  config.offset = row.offset;
  config.alpha = row.alpha;
  return config;
}

std::vector<ReproducedRow> reproduce_table(int table,
                                           const ReproduceOptions &options) {
  if (!(options.scale > 0.0))
    throw std::invalid_argument("reproduce_table: scale must be positive");
  const auto rows = reference_table(table);
  std::vector<ReproducedRow> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reference = rows[i];
    out[i].jumps = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(
               std::llround(static_cast<double>(rows[i].jumps) * options.scale)));
    out[i].seed = options.seed + static_cast<std::uint32_t>(i);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      auto config = config_for(out[i].reference);
      config.delta = options.delta;
      out[i].stats = run_process(config, out[i].jumps, out[i].seed);
      out[i].ratios = derived_ratios(out[i].stats, config);
    }
  };
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, out.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return out;
}

std::vector<Comparison> compare_row(const ReproducedRow &row) {
  const auto &ref = row.reference;
  const double scale = static_cast<double>(row.jumps) /
                       static_cast<double>(ref.jumps);
  const double widen = scale < 1.0 ? 1.0 / std::sqrt(scale) : 1.0;
  const double per_ref = 1e7 / static_cast<double>(ref.jumps);
  const double per_run = 1e7 / static_cast<double>(row.jumps);

  std::vector<Comparison> out;
  auto relative = [&](const char *name, double reference, double raw,
                      double base) {
    Comparison c{name, reference * per_ref, raw, raw * per_run, base * widen,
                 false};
    c.within = c.reference == 0.0
                   ? c.measured == 0.0
                   : std::abs(c.measured - c.reference) <=
                         c.tolerance * std::abs(c.reference);
    out.push_back(c);
  };
  auto absolute = [&](const char *name, double reference,
                      std::optional<double> raw, double base) {
    Comparison c{name, reference, raw.value_or(NAN), raw.value_or(NAN),
                 base * widen, false};
    c.within = raw && std::abs(*raw - reference) <= c.tolerance;
    out.push_back(c);
  };

  const auto &s = row.stats;
  relative("F", static_cast<double>(ref.forward),
           static_cast<double>(s.forward), 0.05);
  relative("R", static_cast<double>(ref.backward),
           static_cast<double>(s.backward), 0.05);
  relative("A", ref.mean_a, s.mean_a, 0.08);
  relative("B", ref.mean_b, s.mean_b, 0.08);
  if (ref.mean_flips)
    relative("C", *ref.mean_flips, s.mean_flips(), 0.05);
  if (ref.r1)
    absolute("r1", *ref.r1, row.ratios.r1, 0.05);
  absolute("r2", ref.r2, row.ratios.r2, 0.05);
  return out;
}

}  // namespace qcmc
