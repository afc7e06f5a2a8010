// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_ERROR_HPP
#define NBRMAT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbrmat {

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// An operation defined only for connected graphs got a disconnected one.
class NotConnectedError : public std::domain_error {
public:
  explicit NotConnectedError(const std::string &op)
      : std::domain_error(op + " requires a connected graph") {}
};

} // namespace nbrmat

#endif // NBRMAT_ERROR_HPP
