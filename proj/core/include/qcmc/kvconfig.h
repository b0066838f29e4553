//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_KVCONFIG_H_
#define QCMC_KVCONFIG_H_

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qcmc {

// Minimal "key = value" configuration. '#' starts a comment, blank lines are
// ignored, keys are [A-Za-z0-9_.-]+, values run to the end of the line with
// surrounding whitespace and optional double quotes stripped. Lists are
// comma separated.
class KeyValueConfig {
public:
  static KeyValueConfig parse(std::istream &in,
                              const std::string &source = "<config>");
  static KeyValueConfig load(const std::string &path);

  bool has(const std::string &key) const;
  void set(const std::string &key, const std::string &value);

  std::string get_string(const std::string &key,
                         const std::string &fallback) const;
  double get_double(const std::string &key, double fallback) const;
  long long get_int(const std::string &key, long long fallback) const;
  bool get_bool(const std::string &key, bool fallback) const;
  std::vector<double> get_list(const std::string &key,
                               const std::vector<double> &fallback) const;

  /// Keys present in the file that no getter asked for.
  std::vector<std::string> unused() const;
  const std::map<std::string, std::string> &entries() const { return values_; }

private:
  const std::string *find(const std::string &key) const;

  std::string source_;
  std::map<std::string, std::string> values_;
  mutable std::set<std::string> used_;
};

}  // namespace qcmc

#endif  // QCMC_KVCONFIG_H_
