// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "nbrmat/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nbrmat::cli::run(args, std::cout, std::cerr);
}
