//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/peptide.h"

#include "qcmc/chirotope.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace qcmc {
namespace {
  constexpr double kDeg = std::numbers::pi / 180.0;

  // Bond lengths (angstrom) and angles (degrees).
  constexpr double kNCa = 1.458;
  constexpr double kCaC = 1.525;
  constexpr double kCN = 1.329;
  constexpr double kCO = 1.231;
  constexpr double kNH = 1.010;
  constexpr double kCH = 1.090;
  constexpr double kCC = 1.530;
  constexpr double kCOg = 1.430;
  constexpr double kOH = 0.960;
  constexpr double kAngNCaC = 111.2;
  constexpr double kAngCaCN = 116.2;
  constexpr double kAngCNCa = 121.7;
  constexpr double kTetra = 109.5;

  Vec3 unit(const Vec3 &v) { return (1.0 / norm(v)) * v; }

  struct Builder {
    std::vector<Vec3> pos;
    std::vector<std::string> names;
    std::vector<std::size_t> residue_of;
    std::vector<std::pair<std::size_t, std::size_t>> bonds;

    std::size_t add(const std::string &name, std::size_t residue,
                    const Vec3 &p) {
      pos.push_back(p);
      names.push_back(name);
      residue_of.push_back(residue);
      return pos.size() - 1;
    }
  };
}  // namespace

Vec3 place_atom(const Vec3 &a, const Vec3 &b, const Vec3 &c, double bond,
                double angle_deg, double torsion) {
  const Vec3 bc = unit(c - b);
  const Vec3 n = unit(cross(b - a, bc));
  const Vec3 m = cross(n, bc);
  const double theta = angle_deg * kDeg;
  const double phi = torsion * kDeg;
  const double dx = -bond * std::cos(theta);
  const double dy = bond * std::sin(theta) * std::cos(phi);
  const double dz = bond * std::sin(theta) * std::sin(phi);
  return c + dx * bc + dy * m + dz * n;
}

double torsion_deg(const Vec3 &a, const Vec3 &b, const Vec3 &c,
                   const Vec3 &d) {
  const Vec3 b1 = b - a;
  const Vec3 b2 = c - b;
  const Vec3 b3 = d - c;
  const Vec3 n1 = cross(b1, b2);
  const Vec3 n2 = cross(b2, b3);
  const double x = dot(n1, n2);
  const double y = dot(cross(n1, n2), unit(b2));
  return std::atan2(y, x) / kDeg;
}

Peptide build_peptide(const PeptideOptions &options) {
  if (options.residues < 1)
    throw std::invalid_argument("peptide: at least one residue required");
  const bool thr = options.residue == Residue::Thr;
  Builder b;
  std::vector<std::size_t> n_idx, ca_idx, c_idx, o_idx, h_idx, cb_idx;
  std::map<std::size_t, std::array<std::size_t, 3>> ca_subst;  // HA, CB
  std::vector<std::array<std::size_t, 5>> cb_subst;  // CB CA HB OG1 CG2

  // Backbone seed: N at origin, CA on +x, C in the xy plane.
  Vec3 n_pos{0.0, 0.0, 0.0};
  Vec3 ca_pos{kNCa, 0.0, 0.0};
  const double t = (180.0 - kAngNCaC) * kDeg;
  Vec3 c_pos = ca_pos + kCaC * Vec3{std::cos(t), std::sin(t), 0.0};

  for (std::size_t r = 0; r < options.residues; ++r) {
    if (r > 0) {
      const Vec3 pn = b.pos[n_idx[r - 1]];
      const Vec3 pca = b.pos[ca_idx[r - 1]];
      const Vec3 pc = b.pos[c_idx[r - 1]];
      n_pos = place_atom(pn, pca, pc, kCN, kAngCaCN, options.psi);
      ca_pos = place_atom(pca, pc, n_pos, kNCa, kAngCNCa, options.omega);
      c_pos = place_atom(pc, n_pos, ca_pos, kCaC, kAngNCaC, options.phi);
    }
    // Amide H sits cis to the previous CA, i.e. anti to the previous O.
    const Vec3 h_pos =
        r > 0 ? place_atom(b.pos[ca_idx[r - 1]], b.pos[c_idx[r - 1]], n_pos,
                           kNH, 123.0, 0.0)
              : place_atom(c_pos, ca_pos, n_pos, kNH, kTetra, 180.0);
    std::size_t n, h;
    if (thr) {
      h = b.add("H", r, h_pos);
      n = b.add("N", r, n_pos);
    } else {
      n = b.add("N", r, n_pos);
      h = b.add("H", r, h_pos);
    }
    const Vec3 ha_pos = place_atom(n_pos, c_pos, ca_pos, kCH, kTetra, -118.0);
    const Vec3 cb_pos = place_atom(n_pos, c_pos, ca_pos, kCC, kTetra, 122.686);
    std::size_t ca, ha;
    if (thr) {
      ha = b.add("HA", r, ha_pos);
      ca = b.add("CA", r, ca_pos);
    } else {
      ca = b.add("CA", r, ca_pos);
      ha = b.add("HA", r, ha_pos);
    }
    const std::size_t cb = b.add("CB", r, cb_pos);
    b.bonds.insert(b.bonds.end(), {{n, h}, {n, ca}, {ca, ha}, {ca, cb}});
    if (thr) {
      const std::size_t hb = b.add(
          "HB", r, place_atom(n_pos, ca_pos, cb_pos, kCH, kTetra, 180.0));
      const Vec3 og_pos = place_atom(n_pos, ca_pos, cb_pos, kCOg, kTetra, 60.0);
      const std::size_t og = b.add("OG1", r, og_pos);
      const std::size_t hg = b.add(
          "HG1", r, place_atom(ca_pos, cb_pos, og_pos, kOH, kTetra, 180.0));
      const Vec3 cg_pos = place_atom(n_pos, ca_pos, cb_pos, kCC, kTetra, -60.0);
      const std::size_t cg = b.add("CG2", r, cg_pos);
      b.bonds.insert(b.bonds.end(), {{cb, hb}, {cb, og}, {og, hg}, {cb, cg}});
      for (int k = 0; k < 3; ++k) {
        const std::size_t hk = b.add(
            "HG2" + std::to_string(k + 1), r,
            place_atom(ca_pos, cb_pos, cg_pos, kCH, kTetra, 60.0 + 120.0 * k));
        b.bonds.emplace_back(cg, hk);
      }
      cb_subst.push_back({cb, ca, hb, og, cg});
    } else {
      for (int k = 0; k < 3; ++k) {
        const std::size_t hk = b.add(
            "HB" + std::to_string(k + 1), r,
            place_atom(n_pos, ca_pos, cb_pos, kCH, kTetra, 60.0 + 120.0 * k));
        b.bonds.emplace_back(cb, hk);
      }
    }
    const std::size_t c = b.add("C", r, c_pos);
    // O anti to the next N: torsion N-CA-C-O = psi + 180.
    const std::size_t o = b.add(
        "O", r, place_atom(n_pos, ca_pos, c_pos, kCO, 120.5, options.psi + 180.0));
    b.bonds.insert(b.bonds.end(), {{ca, c}, {c, o}});
    if (r > 0)
      b.bonds.emplace_back(c_idx[r - 1], n);
    n_idx.push_back(n);
    ca_idx.push_back(ca);
    c_idx.push_back(c);
    o_idx.push_back(o);
    h_idx.push_back(h);
    cb_idx.push_back(cb);
    ca_subst[ca] = {ha, cb, c};
  }

  const std::size_t count = b.pos.size();
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  auto add_pair = [&](std::size_t u, std::size_t v) {
    if (u != v)
      pairs.insert(std::minmax(u, v));
  };
  std::vector<std::vector<std::size_t>> bonded(count);
  for (const auto &[u, v] : b.bonds) {
    add_pair(u, v);
    bonded[u].push_back(v);
    bonded[v].push_back(u);
  }
  // 1-3 pairs fix bond angles.
  for (std::size_t m = 0; m < count; ++m)
    for (std::size_t i = 0; i < bonded[m].size(); ++i)
      for (std::size_t j = i + 1; j < bonded[m].size(); ++j)
        add_pair(bonded[m][i], bonded[m][j]);
  // Planar amide group: the 1-4 pairs across C-N.
  for (std::size_t r = 1; r < options.residues; ++r) {
    add_pair(ca_idx[r - 1], ca_idx[r]);
    add_pair(ca_idx[r - 1], h_idx[r]);
    add_pair(o_idx[r - 1], ca_idx[r]);
    add_pair(o_idx[r - 1], h_idx[r]);
  }
  if (options.helix_edges) {
    for (std::size_t r = 0; r + 4 < options.residues; ++r) {
      add_pair(o_idx[r], h_idx[r + 4]);
      add_pair(o_idx[r], n_idx[r + 4]);
    }
    for (std::size_t r = 0; r + 2 < options.residues; ++r)
      add_pair(ca_idx[r], ca_idx[r + 2]);
  }

  Peptide out;
  out.doc.graph = WeightedGraph(count, 3);
  for (const auto &[u, v] : pairs)
    out.doc.graph.add_edge(u, v, distance(b.pos[u], b.pos[v]), options.spring);
  out.doc.conf = b.pos;
  out.doc.has_coordinates = true;
  out.doc.radius.assign(count, options.radius);
  out.doc.chirotope = PartialChirotope(4);
  auto add_base = [&](std::size_t a, std::size_t p, std::size_t q,
                      std::size_t s) {
    const std::array<std::size_t, 4> t{a, p, q, s};
    out.doc.chirotope.set(t, chi_of_points(b.pos, t, 3));
  };
  // Three ordered bases per chiral center; the fourth follows from the
  // distances.
  for (std::size_t r = 0; r < options.residues; ++r) {
    const std::size_t ca = ca_idx[r];
    const auto [ha, cb, c] = ca_subst[ca];
    const std::size_t n = n_idx[r];
    add_base(ca, n, c, cb);
    add_base(ca, n, c, ha);
    add_base(ca, c, cb, ha);
  }
  for (const auto &[cb, ca, hb, og, cg] : cb_subst) {
    add_base(cb, ca, og, cg);
    add_base(cb, ca, og, hb);
    add_base(cb, og, cg, hb);
  }
  if (options.helix_chirality)
    for (std::size_t r = 0; r + 4 < options.residues; ++r) {
      add_base(ca_idx[r], ca_idx[r + 1], ca_idx[r + 2], ca_idx[r + 3]);
      add_base(ca_idx[r + 1], ca_idx[r + 2], ca_idx[r + 3], ca_idx[r + 4]);
      add_base(ca_idx[r], ca_idx[r + 1], ca_idx[r + 3], ca_idx[r + 4]);
    }
  out.names = std::move(b.names);
  out.residue_of = std::move(b.residue_of);
  out.ca = ca_idx;
  return out;
}

}  // namespace qcmc
