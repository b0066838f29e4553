//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_TOOLS_COMMON_H_
#define QCMC_TOOLS_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace qcmc::cli {

// Bad flag values that CLI11 cannot see; mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The raw argument vector (without the program name) of this invocation,
// recorded in manifests and replayed verbatim.
const std::vector<std::string> &invocation();
void set_invocation(std::vector<std::string> args);

/// Writes `content` to `path` through a temporary file and a rename. "-"
/// writes to stdout.
void write_file(const std::string &path, const std::string &content);

/// Writes <primary>.manifest.json describing this run.
void write_manifest(const std::string &primary, const std::string &command,
                    const nlohmann::json &parameters,
                    const std::vector<std::uint64_t> &seeds,
                    const std::vector<std::string> &outputs);

/// Number or fraction "p/q"; UsageError naming `flag` otherwise.
double parse_value(const std::string &flag, const std::string &text);

std::vector<double> parse_list(const std::string &flag,
                               const std::string &text);

void add_process_commands(CLI::App &app);
void add_entropy_commands(CLI::App &app);
void add_geometry_commands(CLI::App &app);
void add_polymer_commands(CLI::App &app);

}  // namespace qcmc::cli

#endif  // QCMC_TOOLS_COMMON_H_
