//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "qcmc/metropolis.h"
#include "qcmc/pipeline.h"

using qcmc::Conformation;
using qcmc::PotentialModel;
using qcmc::Vec3;

TEST_CASE("Lennard-Jones is cut and shifted") {
  qcmc::LennardJones lj{0.2, 1.0, 2.5};
  CHECK(lj(2.5) == 0.0);
  CHECK(lj(3.0) == 0.0);
  const double shift = 4.0 * 0.2 * (std::pow(2.5, -12) - std::pow(2.5, -6));
  CHECK(lj(1.0) == doctest::Approx(-shift));
  const double rmin = std::pow(2.0, 1.0 / 6.0);
  CHECK(lj(rmin) == doctest::Approx(-0.2 - shift));
}

TEST_CASE("potential model validation") {
  PotentialModel m;
  CHECK_NOTHROW(m.validate(3));
  m.kT = 0.0;
  CHECK_THROWS_AS(m.validate(3), std::invalid_argument);
  m = {};
  m.lj.epsilon = 1.0;
  m.lj.cutoff = 0.5;
  CHECK_THROWS_AS(m.validate(3), std::invalid_argument);
  m = {};
  m.lj_group = {0, 0};
  CHECK_THROWS_AS(m.validate(3), std::invalid_argument);
}

TEST_CASE("LJ skips bonded pairs and other groups") {
  qcmc::WeightedGraph g(3, 3);
  g.add_edge(0, 1, 1.0, 1.0);
  const Conformation conf{{0, 0, 0}, {1, 0, 0}, {0, 1.2, 0}};
  PotentialModel m;
  m.hooke = false;
  m.lj = {0.5, 1.0, 2.5};
  CHECK(qcmc::total_potential(m, g, conf) ==
        doctest::Approx(m.lj(1.2) + m.lj(std::sqrt(1.0 + 1.44))));
  m.lj_group = {0, 0, 1};
  CHECK(qcmc::total_potential(m, g, conf) == 0.0);
  m.lj_group = {0, -1, 0};
  CHECK(qcmc::total_potential(m, g, conf) == doctest::Approx(m.lj(1.2)));
}

TEST_CASE("local differences equal full-energy differences") {
  qcmc::Rng rng(51);
  auto eg = qcmc::testing::random_embeddable_graph(rng, 10, 0.3);
  Conformation conf = eg.truth;
  qcmc::RadiusMap radius(10, 0.5);
  PotentialModel m;
  m.lj = {0.3, 0.8, 2.0};
  m.lj_group.assign(10, 0);
  m.lj_group[3] = 1;
  m.lj_group[4] = -1;
  qcmc::PartialChirotope none(4);
  int accepted = 0;
  for (int step = 0; step < 10000; ++step) {
    const std::size_t u = rng.below(10);
    const double local_before = qcmc::local_potential(m, eg.graph, conf, u);
    const double total_before = qcmc::total_potential(m, eg.graph, conf);
    const auto out =
        qcmc::trial_move(eg.graph, conf, u, radius, m, {}, none, rng);
    accepted += out == qcmc::MoveOutcome::Accepted;
    const double local_after = qcmc::local_potential(m, eg.graph, conf, u);
    const double total_after = qcmc::total_potential(m, eg.graph, conf);
    REQUIRE(total_after - total_before ==
            doctest::Approx(local_after - local_before).epsilon(1e-10).scale(1.0));
  }
  CHECK(accepted > 1000);
}

TEST_CASE("downhill proposals inside D(S) are accepted") {
  // A zero-temperature chain never raises the energy.
  qcmc::Rng rng(52);
  auto eg = qcmc::testing::random_embeddable_graph(rng, 8, 0.3);
  Conformation conf = eg.truth;
  const qcmc::RadiusMap radius(8, 0.3);
  PotentialModel m;
  m.kT = 1e-300;
  qcmc::PartialChirotope none(4);
  double e = qcmc::total_potential(m, eg.graph, conf);
  for (int step = 0; step < 5000; ++step) {
    const std::size_t u = rng.below(8);
    const double before = qcmc::local_potential(m, eg.graph, conf, u);
    const auto out =
        qcmc::trial_move(eg.graph, conf, u, radius, m, {}, none, rng);
    const double after = qcmc::local_potential(m, eg.graph, conf, u);
    if (out == qcmc::MoveOutcome::Accepted)
      CHECK(after <= before);
    const double now = qcmc::total_potential(m, eg.graph, conf);
    REQUIRE(now <= e + 1e-12);
    e = now;
  }
}

TEST_CASE("moves keep a valid chirality") {
  qcmc::WeightedGraph g(4, 3);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v)
      g.add_edge(u, v, 1.0, 1.0);
  Conformation conf{{0, 0, 0}, {1, 0, 0}, {0.5, 0.866, 0}, {0.5, 0.289, 0.816}};
  qcmc::PartialChirotope chi(4);
  const std::vector<std::size_t> t{0, 1, 2, 3};
  chi.set(t, qcmc::chi_of_points(conf, t, 3));
  const qcmc::RadiusMap radius(4, 0.9);
  qcmc::Rng rng(53);
  qcmc::MCOptions options;
  options.sweeps = 5000;
  const auto r = qcmc::mc_run(g, conf, radius, {}, {}, chi, rng, options);
  CHECK(qcmc::chirality_violations(chi, conf).empty());
  CHECK(r.energy_trace.size() == 5000);
  CHECK(r.steps == 20000);
}

TEST_CASE("frozen vertices never move") {
  qcmc::Rng rng(54);
  auto eg = qcmc::testing::random_embeddable_graph(rng, 6, 0.5);
  Conformation conf = eg.truth;
  const qcmc::RadiusMap radius(6, 0.4);
  std::vector<char> frozen{1, 0, 0, 1, 0, 0};
  qcmc::MCOptions options;
  options.sweeps = 2000;
  options.frozen = frozen;
  qcmc::PartialChirotope none(4);
  const auto r = qcmc::mc_run(eg.graph, conf, radius, {}, {}, none, rng, options);
  CHECK(conf[0] == eg.truth[0]);
  CHECK(conf[3] == eg.truth[3]);
  CHECK(conf[1] != eg.truth[1]);
  CHECK(r.steps == 8000);
}

TEST_CASE("dimer bond lengths follow the Boltzmann law") {
  const double w = 1.0;
  const double h = 4.0;
  const double s = 0.5;
  qcmc::WeightedGraph g(2, 3);
  g.add_edge(0, 1, w, h);
  Conformation conf{{0, 0, 0}, {w, 0, 0}};
  const qcmc::RadiusMap radius(2, s);
  qcmc::PartialChirotope none(4);
  qcmc::Rng rng(55);
  const std::size_t bins = 10;
  const auto p = qcmc::testing::dimer_bin_probabilities(w, h, s, 1.0, bins);
  std::vector<double> counts(bins, 0.0);
  qcmc::MCOptions options;
  options.sweeps = 20;
  options.trace = false;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    qcmc::mc_run(g, conf, radius, {}, {}, none, rng, options);
    const double r = qcmc::distance(conf[0], conf[1]);
    const auto k = static_cast<std::size_t>((r - (w - s)) / (2 * s) * bins);
    REQUIRE(k < bins);
    counts[k] += 1.0;
  }
  double chi2 = 0.0;
  for (std::size_t k = 0; k < bins; ++k) {
    const double expect = p[k] * samples;
    chi2 += (counts[k] - expect) * (counts[k] - expect) / expect;
  }
  CHECK(qcmc::testing::chi_squared_tail(chi2, bins - 1.0) > 0.001);
}

TEST_CASE("mc_run input checks") {
  qcmc::WeightedGraph g(2, 3);
  g.add_edge(0, 1, 1.0, 1.0);
  Conformation conf{{0, 0, 0}, {1, 0, 0}};
  qcmc::PartialChirotope none(4);
  qcmc::Rng rng;
  qcmc::MCOptions options;
  std::vector<char> frozen(3, 0);
  options.frozen = frozen;
  CHECK_THROWS_AS(
      qcmc::mc_run(g, conf, qcmc::RadiusMap(2, 0.1), {}, {}, none, rng, options),
      std::invalid_argument);
  options.frozen = {};
  CHECK_THROWS_AS(
      qcmc::mc_run(g, conf, qcmc::RadiusMap(1, 0.1), {}, {}, none, rng, options),
      std::invalid_argument);
}
