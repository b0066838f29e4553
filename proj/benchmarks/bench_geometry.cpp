//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include <vector>

#include "qcmc/chirotope.h"
#include "qcmc/distgeo.h"
#include "qcmc/graph_io.h"
#include "qcmc/lp.h"
#include "qcmc/metropolis.h"
#include "qcmc/peptide.h"
#include "qcmc/pipeline.h"
#include "qcmc/rng.h"

namespace {

qcmc::Peptide helix() {
  qcmc::PeptideOptions options;
  options.radius = 0.02;
  return qcmc::build_peptide(options);
}

void BM_CenteringSweep(benchmark::State &state) {
  const auto p = helix();
  qcmc::Rng rng(4);
  qcmc::Conformation conf = qcmc::random_conformation(p.doc.graph, rng);
  qcmc::CenteringSchedule schedule;
  schedule.max_steps = p.doc.graph.size();
  schedule.stop_displacement = 0.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qcmc::iterative_centering(p.doc.graph, conf, schedule, rng).steps);
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(schedule.max_steps));
}
BENCHMARK(BM_CenteringSweep);

void BM_TrialMove(benchmark::State &state) {
  const auto p = helix();
  qcmc::Conformation conf = p.doc.conf;
  qcmc::PotentialModel model;
  qcmc::Rng rng(5);
  for (auto _ : state) {
    const std::size_t u = rng.below(conf.size());
    benchmark::DoNotOptimize(qcmc::trial_move(p.doc.graph, conf, u,
                                              p.doc.radius, model, {},
                                              p.doc.chirotope, rng));
  }
}
BENCHMARK(BM_TrialMove);

void BM_SimplexDense(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qcmc::Rng rng(6);
  qcmc::SimplexProblem problem;
  problem.c.resize(n);
  for (auto &c : problem.c)
    c = rng.uniform();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n);
    for (auto &a : row)
      a = rng.uniform();
    problem.A.push_back(row);
    problem.b.push_back(1.0 + rng.uniform());
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(qcmc::solve(problem).objective);
}
BENCHMARK(BM_SimplexDense)->Arg(10)->Arg(40)->Arg(100);

void BM_RealizeChirotope(benchmark::State &state) {
  qcmc::PeptideOptions options;
  options.residue = qcmc::Residue::Thr;
  options.residues = static_cast<std::size_t>(state.range(0));
  options.helix_edges = false;
  options.helix_chirality = false;
  const auto p = qcmc::build_peptide(options);
  qcmc::RealizationRequest request;
  request.vertices = p.doc.graph.size();
  request.bases = qcmc::positive_bases(p.doc.chirotope);
  for (auto _ : state)
    benchmark::DoNotOptimize(qcmc::realize_lp(request).feasible);
}
BENCHMARK(BM_RealizeChirotope)->Arg(5)->Arg(20);

}  // namespace
