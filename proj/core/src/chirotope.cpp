//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/chirotope.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "qcmc/lp.h"

namespace qcmc {
namespace {
  // Sorts a copy of the tuple; returns the permutation parity (+1 / -1), or
  // 0 when an id repeats.
  int sort_with_parity(std::span<const std::size_t> tuple,
                       std::array<std::size_t, 4> &sorted) {
    const std::size_t r = tuple.size();
    std::copy(tuple.begin(), tuple.end(), sorted.begin());
    int parity = 1;
    for (std::size_t i = 1; i < r; ++i)
      for (std::size_t j = i; j > 0 && sorted[j - 1] >= sorted[j]; --j) {
        if (sorted[j - 1] == sorted[j])
          return 0;
        std::swap(sorted[j - 1], sorted[j]);
        parity = -parity;
      }
    return parity;
  }

  double orient2(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  }

  int sign_of(double det) {
    if (std::abs(det) < kChiZeroTolerance)
      return 0;
    return det > 0.0 ? 1 : -1;
  }
}  // namespace

double chi_determinant(const Conformation &conf,
                       std::span<const std::size_t> tuple, int dim) {
  for (std::size_t id : tuple)
    if (id >= conf.size())
      throw std::out_of_range("chi: tuple id " + std::to_string(id) +
                              " outside the conformation");
  const std::size_t r = tuple.size();
  auto p = [&](std::size_t i) { return conf[tuple[i]]; };
  if (r == static_cast<std::size_t>(dim) + 1) {
    switch (dim) {
    case 3:
      return det3(p(1) - p(0), p(2) - p(0), p(3) - p(0));
    case 2:
      return orient2(p(0), p(1), p(2));
    case 1:
      return p(1).x - p(0).x;
    }
  } else if (r == static_cast<std::size_t>(dim)) {
    switch (dim) {
    case 3:
      return det3(p(0), p(1), p(2));
    case 2:
      return p(0).x * p(1).y - p(0).y * p(1).x;
    case 1:
      return p(0).x;
    }
  }
  throw std::invalid_argument("chi: tuple length must be dim or dim + 1");
}

int chi_of_points(const Conformation &conf, std::span<const std::size_t> tuple,
                  int dim) {
  return sign_of(chi_determinant(conf, tuple, dim));
}

PartialChirotope::PartialChirotope(int rank) : rank_(rank) {
  if (rank < 1 || rank > 4)
    throw std::invalid_argument("chirotope: rank must be in 1..4");
}

void PartialChirotope::set(std::span<const std::size_t> tuple, int sign) {
  if (tuple.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("chirotope: tuple length must equal the rank");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("chirotope: stored signs must be +1 or -1");
  Entry entry;
  const int parity = sort_with_parity(tuple, entry.ids);
  if (parity == 0)
    throw std::invalid_argument("chirotope: tuple repeats a vertex");
  entry.sign = sign * parity;
  for (const auto &e : entries_)
    if (e.ids == entry.ids) {
      if (e.sign != entry.sign)
        throw std::invalid_argument("chirotope: conflicting sign for a tuple");
      return;
    }
  const std::size_t index = entries_.size();
  entries_.push_back(entry);
  for (int i = 0; i < rank_; ++i) {
    const std::size_t id = entry.ids[static_cast<std::size_t>(i)];
    if (id >= incidence_.size())
      incidence_.resize(id + 1);
    incidence_[id].push_back(index);
  }
}

std::optional<int> PartialChirotope::get(
    std::span<const std::size_t> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("chirotope: tuple length must equal the rank");
  std::array<std::size_t, 4> sorted{};
  const int parity = sort_with_parity(tuple, sorted);
  if (parity == 0)
    return 0;
  if (sorted[0] >= incidence_.size())
    return std::nullopt;
  for (std::size_t index : incidence_[sorted[0]])
    if (entries_[index].ids == sorted)
      return parity * entries_[index].sign;
  return std::nullopt;
}

std::span<const std::size_t> PartialChirotope::incident(std::size_t u) const {
  if (u >= incidence_.size())
    return {};
  return incidence_[u];
}

bool check_chirality(const PartialChirotope &chi, const Conformation &conf,
                     std::size_t u) {
  const auto rank = static_cast<std::size_t>(chi.rank());
  for (std::size_t index : chi.incident(u)) {
    const auto &e = chi.entries()[index];
    const std::span<const std::size_t> tuple(e.ids.data(), rank);
    if (chi_of_points(conf, tuple, chi.rank() - 1) != e.sign)
      return false;
  }
  return true;
}

std::vector<std::size_t> chirality_violations(const PartialChirotope &chi,
                                              const Conformation &conf) {
  std::vector<std::size_t> out;
  const auto rank = static_cast<std::size_t>(chi.rank());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const auto &e = chi.entries()[i];
    if (chi_of_points(conf, {e.ids.data(), rank}, chi.rank() - 1) != e.sign)
      out.push_back(i);
  }
  return out;
}

bool check_gp_signs(std::span<const int> signs) {
  if (signs.size() != 6)
    throw std::invalid_argument("check_gp_signs: six bracket signs expected");
  const int terms[3] = {signs[0] * signs[1], -signs[2] * signs[3],
                        signs[4] * signs[5]};
  bool pos = false;
  bool neg = false;
  for (int t : terms) {
    pos = pos || t > 0;
    neg = neg || t < 0;
  }
  return pos == neg;
}

std::size_t gp_violations(const PartialChirotope &chi) {
  if (chi.rank() != 3)
    throw std::invalid_argument("gp_violations: rank-3 chirotopes only");
  const std::size_t n = chi.ground_size();
  std::size_t bad = 0;
  std::array<std::size_t, 5> s{};
  auto bracket = [&](std::size_t a, std::size_t b, std::size_t c) {
    const std::array<std::size_t, 3> t{a, b, c};
    return chi.get(t);
  };
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            bool violated = false;
            for (std::size_t pivot = 0; pivot < 5 && !violated; ++pivot) {
              std::array<std::size_t, 5> o{};
              o[0] = s[pivot];
              for (std::size_t i = 0, k = 1; i < 5; ++i)
                if (i != pivot)
                  o[k++] = s[i];
              const std::optional<int> b[6] = {
                  bracket(o[0], o[1], o[2]), bracket(o[0], o[3], o[4]),
                  bracket(o[0], o[1], o[3]), bracket(o[0], o[2], o[4]),
                  bracket(o[0], o[1], o[4]), bracket(o[0], o[2], o[3])};
              int signs[6];
              bool defined = true;
              for (int i = 0; i < 6; ++i) {
                defined = defined && b[i].has_value();
                signs[i] = b[i].value_or(0);
              }
              violated = defined && !check_gp_signs(signs);
            }
            bad += violated ? 1 : 0;
          }
  return bad;
}

std::array<double, 4> base_z_coefficients(const Conformation &planar,
                                          const Base &base) {
  const Vec3 &a = planar[base[0]];
  const Vec3 &b = planar[base[1]];
  const Vec3 &c = planar[base[2]];
  const Vec3 &d = planar[base[3]];
  // Cofactors of the homogeneous 4x4 determinant along its z column.
  return {-orient2(b, c, d), orient2(a, c, d), -orient2(a, b, d),
          orient2(a, b, c)};
}

std::vector<Base> positive_bases(const PartialChirotope &chi) {
  if (chi.rank() != 4)
    throw std::invalid_argument("positive_bases: rank-4 chirotope expected");
  std::vector<Base> out;
  out.reserve(chi.size());
  for (const auto &e : chi.entries()) {
    Base base = e.ids;
    if (e.sign < 0)
      std::swap(base[2], base[3]);
    out.push_back(base);
  }
  return out;
}

RealizationResult realize_lp(const RealizationRequest &request) {
  const std::size_t n = request.vertices;
  if (n < 4)
    throw std::invalid_argument("realize_lp: at least 4 vertices required");
  RealizationResult result;
  result.epsilon = std::pow(std::sin(2.0 * std::numbers::pi / n), 3);
  result.conf.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(n);
    result.conf[i] = {std::cos(angle), std::sin(angle), 0.0};
  }

  // Unknowns are the z of vertices that appear in some base.
  std::vector<std::size_t> column(n, n);
  std::vector<std::size_t> vertex_of;
  for (const auto &base : request.bases) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (base[i] >= n)
        throw std::out_of_range("realize_lp: base names an unknown vertex");
      for (std::size_t j = 0; j < i; ++j)
        if (base[i] == base[j])
          throw std::invalid_argument("realize_lp: base repeats a vertex");
      if (column[base[i]] == n) {
        column[base[i]] = vertex_of.size();
        vertex_of.push_back(base[i]);
      }
    }
  }
  std::vector<std::vector<double>> A(
      request.bases.size(), std::vector<double>(vertex_of.size(), 0.0));
  for (std::size_t k = 0; k < request.bases.size(); ++k) {
    const auto coef = base_z_coefficients(result.conf, request.bases[k]);
    for (std::size_t i = 0; i < 4; ++i)
      A[k][column[request.bases[k][i]]] += coef[i];
  }

  if (request.bases.empty()) {
    result.feasible = true;
    result.message = "no bases";
    return result;
  }
  const auto dual = realize_via_dual(A, result.epsilon);
  if (!dual.feasible) {
    result.infeasible_bases = dual.certificate;
    result.message = "dual unbounded: chirality system infeasible for the "
                     "circle placement";
    return result;
  }
  for (std::size_t j = 0; j < vertex_of.size(); ++j)
    result.conf[vertex_of[j]].z = dual.z[j];

  result.min_margin = INFINITY;
  for (const auto &base : request.bases)
    result.min_margin = std::min(
        result.min_margin, chi_determinant(result.conf, base, 3) - result.epsilon);
  result.feasible = result.min_margin >= -1e-8;
  result.message = result.feasible ? "realized" : "residual audit failed";
  return result;
}

SplitResult split_vertices(const WeightedGraph &graph,
                           const PartialChirotope &chi,
                           std::span<const std::size_t> victims,
                           double link_spring) {
  SplitResult out{graph, PartialChirotope(chi.rank()), {}};
  out.merge_map.resize(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v)
    out.merge_map[v] = v;

  // replacement[entry][victim] = vertex carrying that entry.
  std::vector<std::unordered_map<std::size_t, std::size_t>> replacement(
      chi.size());
  for (std::size_t victim : victims) {
    if (victim >= graph.size())
      throw std::out_of_range("split_vertices: unknown victim");
    const auto incident = chi.incident(victim);
    if (incident.size() <= 1)
      continue;
    std::vector<std::size_t> group{victim};
    for (std::size_t i = 1; i < incident.size(); ++i) {
      const std::size_t clone = out.graph.add_vertex();
      out.merge_map.push_back(victim);
      replacement[incident[i]][victim] = clone;
      group.push_back(clone);
    }
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        out.graph.add_edge(group[i], group[j], 0.0, link_spring);
  }

  const auto rank = static_cast<std::size_t>(chi.rank());
  for (std::size_t k = 0; k < chi.size(); ++k) {
    auto ids = chi.entries()[k].ids;
    for (std::size_t i = 0; i < rank; ++i) {
      const auto it = replacement[k].find(ids[i]);
      if (it != replacement[k].end())
        ids[i] = it->second;
    }
    out.chirotope.set({ids.data(), rank}, chi.entries()[k].sign);
  }
  return out;
}

Conformation merge_conformation(const Conformation &split_conf,
                                std::span<const std::size_t> merge_map,
                                std::size_t original_vertices) {
  if (merge_map.size() != split_conf.size())
    throw std::invalid_argument("merge_conformation: map size mismatch");
  Conformation out(original_vertices);
  std::vector<double> count(original_vertices, 0.0);
  for (std::size_t v = 0; v < split_conf.size(); ++v) {
    out.at(merge_map[v]) += split_conf[v];
    count[merge_map[v]] += 1.0;
  }
  for (std::size_t v = 0; v < original_vertices; ++v)
    if (count[v] > 0.0)
      out[v] *= 1.0 / count[v];
  return out;
}

}  // namespace qcmc
