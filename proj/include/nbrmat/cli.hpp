// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_CLI_HPP
#define NBRMAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nbrmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one nbrmat command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace nbrmat::cli

#endif // NBRMAT_CLI_HPP
