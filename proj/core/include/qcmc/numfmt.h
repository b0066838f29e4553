//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_NUMFMT_H_
#define QCMC_NUMFMT_H_

#include <string>

namespace qcmc {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Parses a full string as a double or a fraction "p/q"; throws
/// std::invalid_argument otherwise.
double parse_number(const std::string &text);

}  // namespace qcmc

#endif  // QCMC_NUMFMT_H_
