// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_CLI_HPP
#define GHEIGHTS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gh::cli {

// Runs one command-line invocation; args excludes the program name.
// Results go to out, diagnostics to err.  Exit codes, mutually
// exclusive and exhaustive:
//   0  success
//   1  a check reported holds = false, or a sweep aborted on a violation
//   2  input, parse, or configuration error
//   3  resource limit exceeded
//   4  verifiable theorem hypothesis violated
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gh::cli

#endif
