//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/kvconfig.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "qcmc/numfmt.h"

namespace qcmc {
namespace {
  std::string trim(const std::string &s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
      ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
      --e;
    return s.substr(b, e - b);
  }

  bool valid_key(const std::string &k) {
    if (k.empty())
      return false;
    for (char c : k)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
          c != '.' && c != '-')
        return false;
    return true;
  }
}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream &in,
                                     const std::string &source) {
  KeyValueConfig cfg;
  cfg.source_ = source;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(source + ":" + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key))
      throw std::invalid_argument(source + ":" + std::to_string(line_no) +
                                  ": bad key '" + key + "'");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (cfg.values_.count(key))
      throw std::invalid_argument(source + ":" + std::to_string(line_no) +
                                  ": duplicate key '" + key + "'");
    cfg.values_[key] = value;
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config file '" + path + "'");
  return parse(in, path);
}

bool KeyValueConfig::has(const std::string &key) const {
  return values_.count(key) != 0;
}

void KeyValueConfig::set(const std::string &key, const std::string &value) {
  if (!valid_key(key))
    throw std::invalid_argument("bad key '" + key + "'");
  values_[key] = value;
}

const std::string *KeyValueConfig::find(const std::string &key) const {
  used_.insert(key);
  const auto it = values_.find(key);
  return it == values_.end() ? nullptr : &it->second;
}

std::string KeyValueConfig::get_string(const std::string &key,
                                       const std::string &fallback) const {
  const auto *v = find(key);
  return v ? *v : fallback;
}

double KeyValueConfig::get_double(const std::string &key,
                                  double fallback) const {
  const auto *v = find(key);
  if (!v)
    return fallback;
  try {
    return parse_number(*v);
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument(source_ + ": key '" + key +
                                "' is not a number: '" + *v + "'");
  }
}

long long KeyValueConfig::get_int(const std::string &key,
                                  long long fallback) const {
  const auto *v = find(key);
  if (!v)
    return fallback;
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(*v, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != v->size() || v->empty())
    throw std::invalid_argument(source_ + ": key '" + key +
                                "' is not an integer: '" + *v + "'");
  return out;
}

bool KeyValueConfig::get_bool(const std::string &key, bool fallback) const {
  const auto *v = find(key);
  if (!v)
    return fallback;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on")
    return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off")
    return false;
  throw std::invalid_argument(source_ + ": key '" + key +
                              "' is not a boolean: '" + *v + "'");
}

std::vector<double> KeyValueConfig::get_list(
    const std::string &key, const std::vector<double> &fallback) const {
  const auto *v = find(key);
  if (!v)
    return fallback;
  std::vector<double> out;
  std::stringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      out.push_back(parse_number(item));
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument(source_ + ": key '" + key +
                                  "' has a bad list item '" + item + "'");
    }
  }
  return out;
}

std::vector<std::string> KeyValueConfig::unused() const {
  std::vector<std::string> out;
  for (const auto &[k, v] : values_)
    if (!used_.count(k))
      out.push_back(k);
  return out;
}

}  // namespace qcmc
