//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "common.h"
#include "qcmc/chirotope.h"
#include "qcmc/graph_io.h"
#include "qcmc/kvconfig.h"
#include "qcmc/lp.h"
#include "qcmc/metropolis.h"
#include "qcmc/numfmt.h"
#include "qcmc/peptide.h"
#include "qcmc/pipeline.h"

namespace qcmc::cli {
namespace {

GraphDocument read_graph(const std::string &path) {
  try {
    return load_graph(path);
  } catch (const ParseError &e) {
    throw UsageError(e.what());
  }
}

std::string conformation_csv(const Conformation &conf) {
  std::ostringstream out;
  write_conformation_csv(out, conf);
  return out.str();
}

void add_embed(CLI::App &app) {
  struct Opts {
    std::string graph;
    std::uint64_t seed = 1;
    std::string stages = "100,10,1";
    double c = 1.1;
    double C = 10.0;
    std::size_t max_steps = 200000;
    std::size_t settle_steps = 200000;
    std::size_t rounds = 4;
    std::size_t trace_every = 1;
    std::string out = "-";
    std::string trace;
  };
  auto o = std::make_shared<Opts>();
  auto *cmd = app.add_subcommand(
      "embed", "Vibrant annealing of a graph into its restricted space D(S)");
  cmd->add_option("--graph", o->graph, "Graph file")->required();
  cmd->add_option("--seed", o->seed, "Generator seed")->capture_default_str();
  cmd->add_option("--stages", o->stages, "Radius multipliers, coarse to fine")
      ->capture_default_str();
  cmd->add_option("--c", o->c, "Noise factor (> 1)")->capture_default_str();
  cmd->add_option("--C", o->C, "Step cap factor (> 1)")->capture_default_str();
  cmd->add_option("--max-steps", o->max_steps, "Vibrant steps per stage")
      ->capture_default_str();
  cmd->add_option("--settle-steps", o->settle_steps,
                  "Chirality-checked centering steps per round")
      ->capture_default_str();
  cmd->add_option("--rounds", o->rounds, "Anneal rounds")->capture_default_str();
  cmd->add_option("--out", o->out, "Conformation CSV path or -")
      ->capture_default_str();
  cmd->add_option("--trace", o->trace, "Convergence trace CSV path");
  cmd->add_option("--trace-every", o->trace_every, "Trace stride in steps")
      ->capture_default_str();
  cmd->callback([o] {
    const auto doc = read_graph(o->graph);
    VibrantParams params{o->c, o->C};
    try {
      params.validate();
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    AnnealOptions options;
    options.stages = parse_list("--stages", o->stages);
    options.steps_per_stage = o->max_steps;
    options.settle_steps = o->settle_steps;
    options.rounds = o->rounds;
    options.trace_every = o->trace.empty() ? 0 : std::max<std::size_t>(1, o->trace_every);
    if (o->seed > 0xffffffffull)
      throw UsageError("--seed must fit in 32 bits");
    Rng rng(static_cast<std::uint32_t>(o->seed));
    EmbedResult result;
    try {
      result = embed(doc, rng, params, options);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    write_file(o->out, conformation_csv(result.conf));
    std::vector<std::string> outputs{o->out};
    if (!o->trace.empty()) {
      std::ostringstream t;
      t << "step,vertex,displacement,potential\n";
      for (const auto &s : result.report.trace)
        t << s.step << ',' << s.vertex << ',' << format_double(s.displacement)
          << ',' << format_double(s.potential) << '\n';
      write_file(o->trace, t.str());
      outputs.push_back(o->trace);
    }
    write_manifest(o->out, "embed",
                   {{"graph", o->graph},
                    {"stages", o->stages},
                    {"c", o->c},
                    {"C", o->C},
                    {"max_steps", o->max_steps},
                    {"settle_steps", o->settle_steps},
                    {"rounds", o->rounds}},
                   {o->seed}, outputs);
    const auto &r = result.report;
    std::cerr << "start " << to_string(result.start) << " in_space "
              << (r.in_space ? "yes" : "no") << " steps " << r.steps
              << " rounds " << r.rounds << " outside " << r.outside
              << " chirality_violations " << r.chirality_violations.size()
              << " potential " << format_double(r.final_potential) << '\n';
    if (!r.in_space)
      throw std::runtime_error("D(S) not reached within the step budget");
  });
}

void add_realize(CLI::App &app) {
  struct Opts {
    std::string graph;
    std::string out = "-";
  };
  auto o = std::make_shared<Opts>();
  auto *cmd = app.add_subcommand(
      "realize", "Realize the rank-4 chirotope of a graph by linear programming");
  cmd->add_option("--graph", o->graph, "Graph file with chi lines")->required();
  cmd->add_option("--out", o->out, "Conformation CSV path or -")
      ->capture_default_str();
  cmd->callback([o] {
    const auto doc = read_graph(o->graph);
    if (doc.chirotope.rank() != 4 || doc.chirotope.empty())
      throw UsageError("realize needs rank-4 chi lines");
    RealizationRequest request{doc.graph.size(), positive_bases(doc.chirotope)};
    const auto r = realize_lp(request);
    std::cerr << "bases " << request.bases.size() << " epsilon "
              << format_double(r.epsilon) << " " << r.message << '\n';
    if (!r.feasible) {
      for (std::size_t i : r.infeasible_bases) {
        const auto &b = request.bases[i];
        std::cerr << "infeasible base " << b[0] << ' ' << b[1] << ' ' << b[2]
                  << ' ' << b[3] << '\n';
      }
      throw std::runtime_error("chirotope not realizable for this placement");
    }
    std::cerr << "min_margin " << format_double(r.min_margin) << '\n';
    write_file(o->out, conformation_csv(r.conf));
    write_manifest(o->out, "realize", {{"graph", o->graph}}, {}, {o->out});
  });
}

PotentialModel potential_from(const KeyValueConfig &cfg) {
  PotentialModel model;
  model.hooke = cfg.get_bool("hooke", true);
  model.kT = cfg.get_double("kT", 1.0);
  model.lj.epsilon = cfg.get_double("lj_epsilon", 0.0);
  model.lj.sigma = cfg.get_double("lj_sigma", 1.0);
  model.lj.cutoff = cfg.get_double("lj_cutoff", 2.5);
  return model;
}

void add_mc(CLI::App &app) {
  struct Opts {
    std::string graph;
    std::string potential;
    std::string init;
    std::size_t sweeps = 1000;
    std::string kT;
    std::uint64_t seed = 1;
    std::string out_conf = "-";
    std::string out_report;
  };
  auto o = std::make_shared<Opts>();
  auto *group = app.add_subcommand("mc", "Restricted-space Metropolis");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand("run", "Metropolis sweeps inside D(S)");
  cmd->add_option("--graph", o->graph, "Graph file")->required();
  cmd->add_option("--potential", o->potential, "Potential config file");
  cmd->add_option("--init", o->init,
                  "Start conformation CSV (default: graph coordinates)");
  cmd->add_option("--sweeps", o->sweeps, "Sweeps (|V| trial moves each)")
      ->capture_default_str();
  cmd->add_option("--kT", o->kT, "Temperature; overrides the config");
  cmd->add_option("--seed", o->seed, "Generator seed")->capture_default_str();
  cmd->add_option("--out-conf", o->out_conf, "Final conformation CSV or -")
      ->capture_default_str();
  cmd->add_option("--out-report", o->out_report, "Per-sweep report CSV");
  cmd->callback([o] {
    const auto doc = read_graph(o->graph);
    KeyValueConfig cfg;
    if (!o->potential.empty())
      cfg = KeyValueConfig::load(o->potential);
    PotentialModel model = potential_from(cfg);
    VibrantParams params{cfg.get_double("c", 1.1), cfg.get_double("C", 10.0)};
    if (!o->kT.empty())
      model.kT = parse_value("--kT", o->kT);
    for (const auto &key : cfg.unused())
      throw UsageError("unknown potential key '" + key + "'");
    try {
      model.validate(doc.graph.size());
      params.validate();
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    Conformation conf;
    if (!o->init.empty()) {
      std::ifstream in(o->init);
      if (!in)
        throw UsageError("cannot open " + o->init);
      conf = read_conformation_csv(in);
    } else if (doc.has_coordinates) {
      conf = doc.conf;
    } else {
      throw UsageError("graph has no coordinates; pass --init");
    }
    if (o->seed > 0xffffffffull)
      throw UsageError("--seed must fit in 32 bits");
    Rng rng(static_cast<std::uint32_t>(o->seed));
    MCOptions options;
    options.sweeps = o->sweeps;
    options.trace = !o->out_report.empty();
    const auto report = mc_run(doc.graph, conf, doc.radius, model, params,
                               doc.chirotope, rng, options);
    write_file(o->out_conf, conformation_csv(conf));
    std::vector<std::string> outputs{o->out_conf};
    if (!o->out_report.empty()) {
      std::ostringstream r;
      r << "sweep,energy,in_space\n";
      for (std::size_t i = 0; i < report.energy_trace.size(); ++i)
        r << i + 1 << ',' << format_double(report.energy_trace[i]) << ','
          << (report.in_space_trace[i] ? 1 : 0) << '\n';
      write_file(o->out_report, r.str());
      outputs.push_back(o->out_report);
    }
    write_manifest(o->out_conf, "mc run",
                   {{"graph", o->graph},
                    {"potential", o->potential},
                    {"init", o->init},
                    {"sweeps", o->sweeps},
                    {"kT", model.kT}},
                   {o->seed}, outputs);
    std::cerr << "steps " << report.steps << " accepted " << report.accepted
              << " rejected " << report.rejected << " fallback "
              << report.fallback_moves << " acceptance "
              << format_double(report.acceptance_rate()) << " in_space "
              << (report.in_space ? "yes" : "no") << '\n';
  });
}

SimplexProblem read_lp(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  SimplexProblem p;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string &msg) {
    throw UsageError(path + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head))
      continue;
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;)
      tokens.push_back(t);
    auto number = [&](const std::string &t) {
      try {
        return parse_number(t);
      } catch (const std::invalid_argument &) {
        fail("bad number '" + t + "'");
      }
      return 0.0;
    };
    if (head == "maximize" || head == "minimize") {
      if (!tokens.empty())
        fail("unexpected tokens after " + head);
      p.sense = head == "maximize" ? Sense::Maximize : Sense::Minimize;
    } else if (head == "c") {
      p.c.clear();
      for (const auto &t : tokens)
        p.c.push_back(number(t));
    } else if (head == "row") {
      if (tokens.size() < 3)
        fail("row needs coefficients, a relation and a bound");
      const std::string rel = tokens[tokens.size() - 2];
      if (rel != "<=" && rel != ">=")
        fail("relation must be <= or >=");
      std::vector<double> a;
      for (std::size_t i = 0; i + 2 < tokens.size(); ++i)
        a.push_back(number(tokens[i]));
      p.A.push_back(a);
      p.b.push_back(number(tokens.back()));
      p.relations.push_back(rel == "<=" ? Relation::LessEqual
                                        : Relation::GreaterEqual);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  try {
    p.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(path + ": " + e.what());
  }
  return p;
}

void add_lp(CLI::App &app) {
  auto path = std::make_shared<std::string>();
  auto *group = app.add_subcommand("lp", "Dense simplex solver");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand("solve", "Solve a small LP");
  cmd->add_option("--mps-lite", *path, "LP text file")->required();
  cmd->callback([path] {
    const auto problem = read_lp(*path);
    const auto r = solve(problem);
    std::cout << "status " << to_string(r.status) << '\n';
    if (r.status == LpStatus::Optimal) {
      std::cout << "objective " << format_double(r.objective) << '\n' << "x";
      for (double v : r.x)
        std::cout << ' ' << format_double(v);
      std::cout << "\ny";
      for (double v : r.y)
        std::cout << ' ' << format_double(v);
      std::cout << '\n';
    } else if (r.status == LpStatus::Unbounded) {
      std::cout << "ray";
      for (double v : r.ray)
        std::cout << ' ' << format_double(v);
      std::cout << '\n';
    }
    std::cout << "pivots " << r.pivots << '\n';
    if (r.status != LpStatus::Optimal)
      throw std::runtime_error(std::string("LP ") + to_string(r.status));
  });
}

void add_peptide(CLI::App &app) {
  struct Opts {
    std::string config;
    std::string out = "-";
    std::string ideal;
  };
  auto o = std::make_shared<Opts>();
  auto *group = app.add_subcommand("peptide", "Ideal peptide graphs");
  group->require_subcommand(1);
  auto *cmd = group->add_subcommand(
      "build", "Write the distance graph and chirotope of a peptide");
  cmd->add_option("--config", o->config, "Peptide config file")->required();
  cmd->add_option("--out", o->out, "Graph file path or -")->capture_default_str();
  cmd->add_option("--ideal", o->ideal, "Ideal conformation CSV path");
  cmd->callback([o] {
    const auto cfg = KeyValueConfig::load(o->config);
    PeptideOptions p;
    const std::string residue = cfg.get_string("residue", "ala");
    if (residue == "ala")
      p.residue = Residue::Ala;
    else if (residue == "thr")
      p.residue = Residue::Thr;
    else
      throw UsageError("residue must be ala or thr");
    p.residues = static_cast<std::size_t>(cfg.get_int("residues", 7));
    p.phi = cfg.get_double("phi", p.phi);
    p.psi = cfg.get_double("psi", p.psi);
    p.omega = cfg.get_double("omega", p.omega);
    p.spring = cfg.get_double("spring", p.spring);
    p.radius = cfg.get_double("radius", p.radius);
    p.helix_edges = cfg.get_bool("helix_edges", p.helix_edges);
    p.helix_chirality = cfg.get_bool("helix_chirality", p.helix_chirality);
    const bool coordinates = cfg.get_bool("coordinates", false);
    for (const auto &key : cfg.unused())
      throw UsageError("unknown peptide key '" + key + "'");
    auto peptide = build_peptide(p);
    std::ostringstream g;
    g << "# " << (residue == "ala" ? "Ala" : "Thr") << p.residues << ": "
      << peptide.names.size() << " atoms\n";
    for (std::size_t i = 0; i < peptide.names.size(); ++i)
      g << "# atom " << i << ' ' << peptide.names[i] << ' '
        << peptide.residue_of[i] << '\n';
    const Conformation ideal = peptide.doc.conf;
    peptide.doc.has_coordinates = coordinates;
    write_graph(g, peptide.doc);
    write_file(o->out, g.str());
    std::vector<std::string> outputs{o->out};
    if (!o->ideal.empty()) {
      write_file(o->ideal, conformation_csv(ideal));
      outputs.push_back(o->ideal);
    }
    write_manifest(o->out, "peptide build", {{"config", o->config}}, {},
                   outputs);
  });
}

}  // namespace

void add_geometry_commands(CLI::App &app) {
  add_embed(app);
  add_realize(app);
  add_mc(app);
  add_lp(app);
  add_peptide(app);
}

}  // namespace qcmc::cli
