/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_INTERFACE_CLI_HPP
#define SPLFORGE_INTERFACE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace splforge::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splforge::app

#endif  // SPLFORGE_INTERFACE_CLI_HPP
