//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>

#include "doctest.h"
#include "qcmc/peptide.h"

using doctest::Approx;
using qcmc::Vec3;

namespace {

std::size_t index_of(const qcmc::Peptide &p, std::size_t residue,
                     const std::string &name) {
  for (std::size_t i = 0; i < p.names.size(); ++i)
    if (p.residue_of[i] == residue && p.names[i] == name)
      return i;
  FAIL("atom not found: " << name);
  return 0;
}

double angle_deg(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
  const Vec3 u = a - b;
  const Vec3 v = c - b;
  return std::acos(qcmc::dot(u, v) / (qcmc::norm(u) * qcmc::norm(v))) * 180.0 /
         3.14159265358979323846;
}

}  // namespace

TEST_CASE("NeRF placement reproduces bond, angle and torsion") {
  const Vec3 a{0.3, -1.0, 0.2};
  const Vec3 b{0.0, 0.0, 0.0};
  const Vec3 c{1.5, 0.0, 0.0};
  for (double torsion : {-170.0, -60.0, 0.0, 45.0, 120.0}) {
    const Vec3 d = qcmc::place_atom(a, b, c, 1.33, 116.0, torsion);
    CHECK(qcmc::distance(c, d) == Approx(1.33));
    CHECK(angle_deg(b, c, d) == Approx(116.0));
    CHECK(qcmc::torsion_deg(a, b, c, d) == Approx(torsion));
  }
}

TEST_CASE("alanine helix geometry") {
  qcmc::PeptideOptions o;
  const auto p = qcmc::build_peptide(o);
  CHECK(p.doc.graph.size() == 70);
  CHECK(p.ca.size() == 7);
  const auto &x = p.doc.conf;
  for (std::size_t r = 0; r < 7; ++r) {
    const auto n = index_of(p, r, "N");
    const auto ca = index_of(p, r, "CA");
    const auto c = index_of(p, r, "C");
    const auto cb = index_of(p, r, "CB");
    CHECK(qcmc::distance(x[n], x[ca]) == Approx(1.458));
    CHECK(qcmc::distance(x[ca], x[c]) == Approx(1.525));
    // L configuration.
    CHECK(qcmc::det3(x[c] - x[ca], x[cb] - x[ca], x[n] - x[ca]) > 0.0);
    if (r + 1 < 7) {
      const auto next_n = index_of(p, r + 1, "N");
      CHECK(qcmc::distance(x[c], x[next_n]) == Approx(1.329));
      CHECK(qcmc::torsion_deg(x[n], x[ca], x[c], x[next_n]) == Approx(-47.0));
      CHECK(std::abs(qcmc::torsion_deg(x[ca], x[c], x[next_n],
                                       x[index_of(p, r + 1, "CA")])) ==
            Approx(180.0));
    }
    if (r > 0)
      CHECK(qcmc::torsion_deg(x[index_of(p, r - 1, "C")], x[n], x[ca], x[c]) ==
            Approx(-57.8));
  }
  // Alpha-helix hydrogen bond and a right-handed CA trace.
  const double hb = qcmc::distance(x[index_of(p, 0, "O")], x[index_of(p, 4, "H")]);
  CHECK(hb > 1.8);
  CHECK(hb < 2.3);
  CHECK(qcmc::torsion_deg(x[p.ca[0]], x[p.ca[1]], x[p.ca[2]], x[p.ca[3]]) > 0.0);
  CHECK(p.doc.graph.has_edge(index_of(p, 0, "O"), index_of(p, 4, "H")));
  CHECK(p.doc.graph.has_edge(p.ca[2], p.ca[4]));
  CHECK(qcmc::chirality_violations(p.doc.chirotope, x).empty());
}

TEST_CASE("every stored edge length is read off the ideal structure") {
  const auto p = qcmc::build_peptide({});
  for (const auto &e : p.doc.graph.edges())
    CHECK(e.weight ==
          Approx(qcmc::distance(p.doc.conf[e.u], p.doc.conf[e.v])));
}

TEST_CASE("threonine chain without helix constraints") {
  qcmc::PeptideOptions o;
  o.residue = qcmc::Residue::Thr;
  o.residues = 5;
  o.helix_edges = false;
  o.helix_chirality = false;
  const auto p = qcmc::build_peptide(o);
  CHECK(p.doc.graph.size() == 70);
  // Three bases for each of the two chiral centres per residue.
  CHECK(p.doc.chirotope.size() == 30);
  CHECK(qcmc::chirality_violations(p.doc.chirotope, p.doc.conf).empty());
  CHECK_FALSE(p.doc.graph.has_edge(index_of(p, 0, "O"), index_of(p, 4, "H")));
}
