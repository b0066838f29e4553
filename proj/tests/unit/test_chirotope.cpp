//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qcmc/chirotope.h"
#include "qcmc/graph_io.h"
#include "qcmc/rng.h"

using qcmc::Conformation;
using qcmc::PartialChirotope;
using qcmc::Vec3;

TEST_CASE("orientation of a right-handed tetrahedron") {
  const Conformation conf{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<std::size_t> t{0, 1, 2, 3};
  CHECK(qcmc::chi_of_points(conf, t, 3) == 1);
  const std::vector<std::size_t> swapped{0, 2, 1, 3};
  CHECK(qcmc::chi_of_points(conf, swapped, 3) == -1);
  CHECK(qcmc::chi_determinant(conf, t, 3) == doctest::Approx(1.0));
  const Conformation flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(qcmc::chi_of_points(flat, t, 3) == 0);
  const std::vector<std::size_t> tri{0, 1, 2};
  CHECK(qcmc::chi_of_points(conf, tri, 2) == 1);
}

TEST_CASE("partial chirotope stores signs up to permutation parity") {
  PartialChirotope chi(4);
  const std::array<std::size_t, 4> t{3, 1, 2, 0};
  chi.set(t, 1);
  const std::array<std::size_t, 4> sorted{0, 1, 2, 3};
  // (3 1 2 0) -> (0 1 2 3) is one transposition.
  CHECK(chi.get(sorted) == -1);
  CHECK(chi.get(t) == 1);
  const std::array<std::size_t, 4> repeat{0, 0, 2, 3};
  CHECK(chi.get(repeat) == 0);
  const std::array<std::size_t, 4> other{0, 1, 2, 4};
  CHECK_FALSE(chi.get(other));
  CHECK_NOTHROW(chi.set(sorted, -1));
  CHECK(chi.size() == 1);
  CHECK_THROWS_AS(chi.set(sorted, 1), std::invalid_argument);
  CHECK_THROWS_AS(chi.set(repeat, 1), std::invalid_argument);
  CHECK(chi.incident(2).size() == 1);
  CHECK_THROWS_AS(PartialChirotope(5), std::invalid_argument);
}

TEST_CASE("chirality checks on a conformation") {
  PartialChirotope chi(4);
  const std::array<std::size_t, 4> t{0, 1, 2, 3};
  chi.set(t, 1);
  Conformation conf{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 5, 5}};
  CHECK(qcmc::check_chirality(chi, conf, 0));
  CHECK(qcmc::check_chirality(chi, conf, 4));
  conf[3].z = -1.0;
  CHECK_FALSE(qcmc::check_chirality(chi, conf, 3));
  CHECK(qcmc::chirality_violations(chi, conf).size() == 1);
}

TEST_CASE("three-term Grassmann-Pluecker sign test") {
  const std::array<int, 6> bad{1, 1, -1, 1, 1, 1};
  const std::array<int, 6> good{1, 1, 1, 1, 1, 1};
  CHECK_FALSE(qcmc::check_gp_signs(bad));
  CHECK(qcmc::check_gp_signs(good));
  const std::array<int, 6> zeros{0, 0, 0, 0, 0, 0};
  CHECK(qcmc::check_gp_signs(zeros));
  const std::array<int, 5> short_list{1, 1, 1, 1, 1};
  CHECK_THROWS_AS(qcmc::check_gp_signs(short_list), std::invalid_argument);
}

TEST_CASE("realizable rank-3 chirotopes satisfy the relations") {
  qcmc::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Conformation pts(7);
    for (auto &p : pts)
      p = Vec3{rng.uniform(), rng.uniform(), 0.0};
    PartialChirotope chi(3);
    for (std::size_t a = 0; a < 7; ++a)
      for (std::size_t b = a + 1; b < 7; ++b)
        for (std::size_t c = b + 1; c < 7; ++c) {
          const std::array<std::size_t, 3> t{a, b, c};
          chi.set(t, qcmc::chi_of_points(pts, t, 2));
        }
    CHECK(qcmc::gp_violations(chi) == 0);
  }
}

TEST_CASE("LP realization of signs read off a lifted circle") {
  qcmc::Rng rng(42);
  const std::size_t n = 9;
  for (int trial = 0; trial < 20; ++trial) {
    Conformation lifted(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = 2.0 * std::numbers::pi * i / n;
      lifted[i] = {std::cos(a), std::sin(a), 4.0 * rng.uniform() - 2.0};
    }
    qcmc::RealizationRequest req;
    req.vertices = n;
    for (int k = 0; k < 12; ++k) {
      qcmc::Base b{};
      for (std::size_t i = 0; i < 4;) {
        b[i] = rng.below(n);
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j)
          fresh = fresh && b[j] != b[i];
        i += fresh ? 1 : 0;
      }
      if (qcmc::chi_of_points(lifted, b, 3) < 0)
        std::swap(b[0], b[1]);
      req.bases.push_back(b);
    }
    const auto r = qcmc::realize_lp(req);
    REQUIRE(r.feasible);
    for (const auto &b : req.bases) {
      const Vec3 &p = r.conf[b[0]];
      const double det = qcmc::det3(r.conf[b[1]] - p, r.conf[b[2]] - p,
                                    r.conf[b[3]] - p);
      CHECK(det >= r.epsilon - 1e-8);
    }
  }
}

TEST_CASE("contradictory bases are reported infeasible") {
  qcmc::RealizationRequest req;
  req.vertices = 5;
  req.bases = {{0, 1, 2, 3}, {1, 0, 2, 3}};
  const auto r = qcmc::realize_lp(req);
  CHECK_FALSE(r.feasible);
  CHECK(r.infeasible_bases.size() == 2);
  req.bases = {{0, 1, 1, 3}};
  CHECK_THROWS_AS(qcmc::realize_lp(req), std::invalid_argument);
}

TEST_CASE("positive bases flip negative entries") {
  PartialChirotope chi(4);
  const std::array<std::size_t, 4> t{0, 1, 2, 3};
  chi.set(t, -1);
  const auto bases = qcmc::positive_bases(chi);
  REQUIRE(bases.size() == 1);
  CHECK(chi.get(bases[0]) == 1);
}

TEST_CASE("Thr5 chain realizes") {
  const auto doc = qcmc::load_graph(QCMC_DATA_DIR "/thr5.graph");
  CHECK(doc.graph.size() == 70);
  CHECK(doc.chirotope.size() == 30);
  qcmc::RealizationRequest req{doc.graph.size(),
                               qcmc::positive_bases(doc.chirotope)};
  const auto r = qcmc::realize_lp(req);
  CHECK(r.feasible);
  CHECK(r.min_margin >= -1e-8);
  CHECK(qcmc::chirality_violations(doc.chirotope, r.conf).empty());
}

TEST_CASE("vertex splitting and merging") {
  qcmc::WeightedGraph g(5, 3);
  g.add_edge(0, 1, 1.0, 1.0);
  PartialChirotope chi(4);
  const std::array<std::size_t, 4> a{0, 1, 2, 3};
  const std::array<std::size_t, 4> b{0, 1, 2, 4};
  chi.set(a, 1);
  chi.set(b, -1);
  const std::vector<std::size_t> victims{0};
  const auto s = qcmc::split_vertices(g, chi, victims, 2.0);
  CHECK(s.graph.size() == 6);
  CHECK(s.merge_map[5] == 0);
  CHECK(s.graph.has_edge(0, 5));
  CHECK(s.chirotope.size() == 2);
  CHECK(s.chirotope.incident(0).size() == 1);
  CHECK(s.chirotope.incident(5).size() == 1);
  Conformation split(6);
  split[0] = {1.0, 0.0, 0.0};
  split[5] = {3.0, 0.0, 0.0};
  const auto merged = qcmc::merge_conformation(split, s.merge_map, 5);
  CHECK(merged[0].x == 2.0);
}
