//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "common.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcmc/numfmt.h"

namespace qcmc::cli {
namespace {
  std::vector<std::string> &args_storage() {
    static std::vector<std::string> args;
    return args;
  }

  std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }
}  // namespace

const std::vector<std::string> &invocation() { return args_storage(); }

void set_invocation(std::vector<std::string> args) {
  args_storage() = std::move(args);
}

void write_file(const std::string &path, const std::string &content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush())
      throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_manifest(const std::string &primary, const std::string &command,
                    const nlohmann::json &parameters,
                    const std::vector<std::uint64_t> &seeds,
                    const std::vector<std::string> &outputs) {
  if (primary.empty() || primary == "-")
    return;
  nlohmann::json m;
  m["tool"] = "qcmc";
  m["version"] = QCMC_VERSION;
  m["timestamp"] = utc_timestamp();
  m["command"] = command;
  m["argv"] = invocation();
  m["parameters"] = parameters;
  m["seeds"] = seeds;
  m["outputs"] = outputs;
  write_file(primary + ".manifest.json", m.dump(2) + "\n");
}

double parse_value(const std::string &flag, const std::string &text) {
  try {
    return parse_number(text);
  } catch (const std::invalid_argument &) {
    throw UsageError(flag + ": expected a number or fraction, got '" + text +
                     "'");
  }
}

std::vector<double> parse_list(const std::string &flag,
                               const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_value(flag, item));
  if (out.empty())
    throw UsageError(flag + ": empty list");
  return out;
}

}  // namespace qcmc::cli
