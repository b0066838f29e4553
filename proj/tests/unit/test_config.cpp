//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "qcmc/graph_io.h"
#include "qcmc/kvconfig.h"
#include "qcmc/numfmt.h"

TEST_CASE("numbers and fractions") {
  CHECK(qcmc::parse_number("2/3") == doctest::Approx(2.0 / 3.0));
  CHECK(qcmc::parse_number("+1e-3") == 1e-3);
  CHECK(qcmc::parse_number("-7") == -7.0);
  CHECK_THROWS_AS(qcmc::parse_number("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(qcmc::parse_number("abc"), std::invalid_argument);
  CHECK_THROWS_AS(qcmc::parse_number(""), std::invalid_argument);
  for (double v : {0.1, 1.0 / 3.0, 12345.678, -2e-300})
    CHECK(qcmc::parse_number(qcmc::format_double(v)) == v);
}

TEST_CASE("key-value configuration") {
  std::istringstream in("# comment\n a = 1.5\nname = \"ala\"\nflag = true\n"
                        "list = 1, 2/3, 4\n");
  const auto cfg = qcmc::KeyValueConfig::parse(in);
  CHECK(cfg.get_double("a", 0.0) == 1.5);
  CHECK(cfg.get_string("name", "") == "ala");
  CHECK(cfg.get_bool("flag", false));
  CHECK(cfg.get_double("missing", 4.0) == 4.0);
  const auto list = cfg.get_list("list", {});
  REQUIRE(list.size() == 3);
  CHECK(list[1] == doctest::Approx(2.0 / 3.0));
  CHECK(cfg.unused().empty());
  CHECK_THROWS_AS(cfg.get_int("a", 0), std::invalid_argument);

  std::istringstream dup("a = 1\na = 2\n");
  CHECK_THROWS_AS(qcmc::KeyValueConfig::parse(dup), std::invalid_argument);
  std::istringstream bad("just words\n");
  CHECK_THROWS_AS(qcmc::KeyValueConfig::parse(bad), std::invalid_argument);
}

TEST_CASE("graph files round-trip") {
  std::istringstream in(
      "dim 3\nvertex 0 0 0 0\nvertex 1 1 0 0\nvertex 2 0 1 0\n"
      "vertex 3 0 0 1 # apex\nedge 0 1 1 2\nedge 1 2 1.5 1\n"
      "radius_all 0.1\nradius 2 0.5\nchi 0 1 2 3 +1\n");
  const auto doc = qcmc::parse_graph(in);
  CHECK(doc.graph.size() == 4);
  CHECK(doc.graph.edge_count() == 2);
  CHECK(doc.has_coordinates);
  CHECK(doc.radius[0] == 0.1);
  CHECK(doc.radius[2] == 0.5);
  CHECK(doc.chirotope.size() == 1);
  const std::size_t t[4] = {0, 1, 2, 3};
  CHECK(doc.chirotope.get(t) == 1);

  std::ostringstream out;
  qcmc::write_graph(out, doc);
  std::istringstream back(out.str());
  const auto again = qcmc::parse_graph(back);
  CHECK(again.graph.edges().size() == 2);
  CHECK(again.graph.edges()[1].weight == 1.5);
  CHECK(again.conf[3].z == 1.0);
  CHECK(again.radius == doc.radius);
  CHECK(again.chirotope.get(t) == 1);
}

TEST_CASE("graph parse errors name the line") {
  auto fails = [](const std::string &text) {
    std::istringstream in(text);
    try {
      qcmc::parse_graph(in, "g");
    } catch (const qcmc::ParseError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(fails("vertex 0\nvertex 1\nedge 0 1 -1 1\n").find("g:3") !=
        std::string::npos);
  CHECK_FALSE(fails("vertex 0\nvertex 2\n").empty());
  CHECK_FALSE(fails("vertex 0\nvertex 1\nedge 0 1 1 1\nedge 1 0 1 1\n").empty());
  CHECK_FALSE(fails("vertex 0\ndim 2\n").empty());
  CHECK_FALSE(fails("bogus 1\n").empty());
  CHECK_FALSE(fails("vertex 0\nvertex 1\nvertex 2\nvertex 3\n"
                    "chi 0 1 2 3 +1\nchi 1 0 2 3 +1\n")
                  .empty());
}

TEST_CASE("conformation csv round-trip") {
  const qcmc::Conformation conf{{1.0, 2.0, 3.0}, {-0.5, 1e-9, 7.0}};
  std::ostringstream out;
  qcmc::write_conformation_csv(out, conf);
  std::istringstream in(out.str());
  CHECK(qcmc::read_conformation_csv(in) == conf);
}
