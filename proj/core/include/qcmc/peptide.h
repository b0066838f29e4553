//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_PEPTIDE_H_
#define QCMC_PEPTIDE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "qcmc/graph_io.h"
#include "qcmc/vec.h"

namespace qcmc {

/// Places d with |cd| = bond, angle bcd = angle_deg and torsion abcd =
/// torsion_deg (natural extension of reference frame).
Vec3 place_atom(const Vec3 &a, const Vec3 &b, const Vec3 &c, double bond,
                double angle_deg, double torsion_deg);

/// Torsion angle abcd in degrees, in (-180, 180].
double torsion_deg(const Vec3 &a, const Vec3 &b, const Vec3 &c, const Vec3 &d);

enum class Residue { Ala, Thr };

struct PeptideOptions {
  Residue residue = Residue::Ala;
  std::size_t residues = 7;
  double phi = -57.8;  // right-handed alpha helix
  double psi = -47.0;
  double omega = 180.0;
  double spring = 1.0;          // h on every edge
  double radius = 0.1;          // S on every atom
  bool helix_edges = true;      // O(i)-H(i+4), O(i)-N(i+4), CA(i)-CA(i+2)
  bool helix_chirality = true;  // 3 bases per 5-residue CA window
};

// Ideal-geometry peptide with its distance graph and chirality bases. All
// edge weights are read off the ideal coordinates, so the ideal structure is
// an exact embedding.
struct Peptide {
  GraphDocument doc;  // doc.conf holds the ideal coordinates
  std::vector<std::string> names;
  std::vector<std::size_t> residue_of;
  std::vector<std::size_t> ca;  // CA index per residue
};

/// Atom order per residue: Ala N H CA HA CB HB1 HB2 HB3 C O (10 atoms);
/// Thr H N HA CA CB HB OG1 HG1 CG2 HG21 HG22 HG23 C O (14 atoms).
Peptide build_peptide(const PeptideOptions &options);

}  // namespace qcmc

#endif  // QCMC_PEPTIDE_H_
