//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_GRAPH_IO_H_
#define QCMC_GRAPH_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qcmc/chirotope.h"
#include "qcmc/graph.h"

namespace qcmc {

// Line-oriented graph file:
//   dim <d>
//   vertex <id> [x y z]
//   edge <u> <v> <W> <h>
//   radius <id> <S>
//   radius_all <S>
//   chi <a> <b> <c> [<d>] <+1|-1>
// '#' starts a comment. Vertex ids must be dense from 0.
struct GraphDocument {
  WeightedGraph graph;
  Conformation conf;
  RadiusMap radius;
  PartialChirotope chirotope{4};
  bool has_coordinates = false;  // every vertex line carried x y z
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError with "<source>:<line>: message" on malformed input.
GraphDocument parse_graph(std::istream &in, const std::string &source = "<input>");
GraphDocument load_graph(const std::string &path);

void write_graph(std::ostream &out, const GraphDocument &doc);

/// CSV with header id,x,y,z and round-trip doubles.
void write_conformation_csv(std::ostream &out, const Conformation &conf);
Conformation read_conformation_csv(std::istream &in);

}  // namespace qcmc

#endif  // QCMC_GRAPH_IO_H_
