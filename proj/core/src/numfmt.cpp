//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qcmc/numfmt.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qcmc {

std::string format_double(double value) {
  if (std::isnan(value))
    return "nan";
  if (std::isinf(value))
    return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {
  double parse_plain(const std::string &text, const std::string &whole) {
    double value = 0.0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (first != last && *first == '+')
      ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || first == last)
      throw std::invalid_argument("not a number: '" + whole + "'");
    return value;
  }
}  // namespace

double parse_number(const std::string &text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    return parse_plain(text, text);
  const double num = parse_plain(text.substr(0, slash), text);
  const double den = parse_plain(text.substr(slash + 1), text);
  if (den == 0.0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return num / den;
}

}  // namespace qcmc
