//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/graph_io.h"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "qcmc/numfmt.h"

namespace qcmc {
namespace {
  struct VertexLine {
    bool seen = false;
    bool has_xyz = false;
    Vec3 p;
  };

  struct PendingEdge {
    std::size_t u, v;
    double w, h;
    int line;
  };

  struct PendingChi {
    std::vector<std::size_t> ids;
    int sign;
    int line;
  };

  std::vector<std::string> split_words(const std::string &line) {
    std::vector<std::string> words;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w)
      words.push_back(w);
    return words;
  }
}  // namespace

GraphDocument parse_graph(std::istream &in, const std::string &source) {
  int line_no = 0;
  auto fail = [&](const std::string &msg, int at = -1) -> ParseError {
    return ParseError(source + ":" + std::to_string(at < 0 ? line_no : at) +
                      ": " + msg);
  };
  auto to_id = [&](const std::string &w) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(w, &pos);
    } catch (const std::exception &) {
      throw fail("bad vertex id '" + w + "'");
    }
    if (pos != w.size() || w[0] == '-')
      throw fail("bad vertex id '" + w + "'");
    return static_cast<std::size_t>(v);
  };
  auto to_num = [&](const std::string &w) {
    try {
      return parse_number(w);
    } catch (const std::invalid_argument &e) {
      throw fail(e.what());
    }
  };

  int dim = 3;
  bool dim_seen = false;
  std::vector<VertexLine> vertices;
  std::vector<PendingEdge> edges;
  std::vector<std::pair<std::size_t, double>> radii;
  std::optional<double> radius_all;
  std::vector<PendingChi> chis;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto w = split_words(line);
    if (w.empty())
      continue;
    const std::string &key = w[0];
    if (key == "dim") {
      if (w.size() != 2)
        throw fail("dim takes one value");
      const auto d = to_id(w[1]);
      if (d < 1 || d > 3)
        throw fail("dim must be 1, 2 or 3");
      if (!vertices.empty() || dim_seen)
        throw fail("dim must come first and only once");
      dim = static_cast<int>(d);
      dim_seen = true;
    } else if (key == "vertex") {
      if (w.size() != 2 && w.size() != 5)
        throw fail("vertex takes an id and optionally x y z");
      const auto id = to_id(w[1]);
      if (id >= vertices.size())
        vertices.resize(id + 1);
      if (vertices[id].seen)
        throw fail("vertex " + w[1] + " declared twice");
      vertices[id].seen = true;
      if (w.size() == 5) {
        vertices[id].has_xyz = true;
        vertices[id].p = {to_num(w[2]), to_num(w[3]), to_num(w[4])};
      }
    } else if (key == "edge") {
      if (w.size() != 5)
        throw fail("edge takes u v W h");
      edges.push_back({to_id(w[1]), to_id(w[2]), to_num(w[3]), to_num(w[4]),
                       line_no});
    } else if (key == "radius") {
      if (w.size() != 3)
        throw fail("radius takes an id and S");
      const double s = to_num(w[2]);
      if (!(s >= 0.0))
        throw fail("radius must be >= 0");
      radii.emplace_back(to_id(w[1]), s);
    } else if (key == "radius_all") {
      if (w.size() != 2)
        throw fail("radius_all takes S");
      radius_all = to_num(w[1]);
      if (!(*radius_all >= 0.0))
        throw fail("radius must be >= 0");
    } else if (key == "chi") {
      if (w.size() != 5 && w.size() != 6)
        throw fail("chi takes 3 or 4 ids and a sign");
      PendingChi chi{{}, 0, line_no};
      for (std::size_t i = 1; i + 1 < w.size(); ++i)
        chi.ids.push_back(to_id(w[i]));
      const std::string &s = w.back();
      if (s == "+1" || s == "1" || s == "+")
        chi.sign = 1;
      else if (s == "-1" || s == "-")
        chi.sign = -1;
      else
        throw fail("chi sign must be +1 or -1");
      chis.push_back(chi);
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }

  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!vertices[i].seen)
      throw fail("vertex ids must be dense; missing " + std::to_string(i), 0);

  GraphDocument doc{WeightedGraph(vertices.size(), dim), {}, {}, PartialChirotope(4),
                    false};
  doc.conf.resize(vertices.size());
  doc.has_coordinates = !vertices.empty();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    doc.conf[i] = vertices[i].p;
    doc.has_coordinates = doc.has_coordinates && vertices[i].has_xyz;
  }
  for (const auto &e : edges) {
    try {
      doc.graph.add_edge(e.u, e.v, e.w, e.h);
    } catch (const std::exception &ex) {
      throw fail(ex.what(), e.line);
    }
  }
  doc.radius.assign(vertices.size(), radius_all.value_or(0.0));
  for (const auto &[id, s] : radii) {
    if (id >= vertices.size())
      throw fail("radius for unknown vertex " + std::to_string(id), 0);
    doc.radius[id] = s;
  }
  if (!chis.empty()) {
    const auto rank = chis.front().ids.size();
    doc.chirotope = PartialChirotope(static_cast<int>(rank));
    for (const auto &c : chis) {
      if (c.ids.size() != rank)
        throw fail("chi lines mix ranks", c.line);
      for (std::size_t id : c.ids)
        if (id >= vertices.size())
          throw fail("chi names unknown vertex " + std::to_string(id), c.line);
      try {
        doc.chirotope.set(c.ids, c.sign);
      } catch (const std::exception &ex) {
        throw fail(ex.what(), c.line);
      }
    }
  }
  return doc;
}

GraphDocument load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in, path);
}

void write_graph(std::ostream &out, const GraphDocument &doc) {
  out << "dim " << doc.graph.dim() << '\n';
  for (std::size_t i = 0; i < doc.graph.size(); ++i) {
    out << "vertex " << i;
    if (doc.has_coordinates && i < doc.conf.size())
      out << ' ' << format_double(doc.conf[i].x) << ' '
          << format_double(doc.conf[i].y) << ' ' << format_double(doc.conf[i].z);
    out << '\n';
  }
  for (const auto &e : doc.graph.edges())
    out << "edge " << e.u << ' ' << e.v << ' ' << format_double(e.weight) << ' '
        << format_double(e.spring) << '\n';
  for (std::size_t i = 0; i < doc.radius.size(); ++i)
    if (doc.radius[i] > 0.0)
      out << "radius " << i << ' ' << format_double(doc.radius[i]) << '\n';
  const auto rank = static_cast<std::size_t>(doc.chirotope.rank());
  for (const auto &e : doc.chirotope.entries()) {
    out << "chi";
    for (std::size_t i = 0; i < rank; ++i)
      out << ' ' << e.ids[i];
    out << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
  }
}

void write_conformation_csv(std::ostream &out, const Conformation &conf) {
  out << "id,x,y,z\n";
  for (std::size_t i = 0; i < conf.size(); ++i)
    out << i << ',' << format_double(conf[i].x) << ','
        << format_double(conf[i].y) << ',' << format_double(conf[i].z) << '\n';
}

Conformation read_conformation_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("id,x,y,z", 0) != 0)
    throw ParseError("conformation CSV must start with id,x,y,z");
  Conformation conf;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      cells.push_back(cell);
    if (cells.size() != 4)
      throw ParseError("conformation CSV line " + std::to_string(line_no) +
                       ": expected 4 cells");
    const auto id = std::stoull(cells[0]);
    if (id != conf.size())
      throw ParseError("conformation CSV ids must be dense and ordered");
    conf.push_back(
        {parse_number(cells[1]), parse_number(cells[2]), parse_number(cells[3])});
  }
  return conf;
}

}  // namespace qcmc
