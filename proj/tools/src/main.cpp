//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "common.h"

namespace {

int run(std::vector<std::string> args, bool allow_replay);

void add_replay(CLI::App &app, int &status, bool allow_replay) {
  auto *cmd = app.add_subcommand(
      "replay", "Re-run the command recorded in a manifest");
  static std::string path;
  cmd->add_option("--manifest", path, "Manifest JSON written by a prior run")
      ->required();
  cmd->callback([&status, allow_replay] {
    if (!allow_replay)
      throw qcmc::cli::UsageError("replay: a manifest cannot replay a replay");
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("cannot open " + path);
    const auto manifest = nlohmann::json::parse(in);
    status = run(manifest.at("argv").get<std::vector<std::string>>(), false);
  });
}

int run(std::vector<std::string> args, bool allow_replay) {
  qcmc::cli::set_invocation(args);
  CLI::App app{"qcmc: directed path-integral Monte Carlo and molecular "
               "distance geometry toolkit"};
  app.name("qcmc");
  app.set_version_flag("--version", QCMC_VERSION);
  app.require_subcommand(1);
  int status = 0;
  qcmc::cli::add_process_commands(app);
  qcmc::cli::add_entropy_commands(app);
  qcmc::cli::add_geometry_commands(app);
  qcmc::cli::add_polymer_commands(app);
  add_replay(app, status, allow_replay);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qcmc::cli::UsageError &e) {
    std::cerr << "qcmc: usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "qcmc: error: " << e.what() << '\n';
    return 1;
  }
  return status;
}

}  // namespace

int main(int argc, char **argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), true);
}
