// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_RATIONAL_HPP
#define NBRMAT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nbrmat {

/// Non-negative fraction kept in lowest terms.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::uint64_t num, std::uint64_t den = 1)
      : num_(num), den_(den) {
    if (den_ == 0) {
      throw std::domain_error("zero denominator");
    }
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr std::uint64_t num() const { return num_; }
  constexpr std::uint64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const Rational &, const Rational &) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational &a,
                                                    const Rational &b) {
    return static_cast<Wide>(a.num_) * b.den_ <=>
           static_cast<Wide>(b.num_) * a.den_;
  }

private:
  __extension__ using Wide = unsigned __int128;

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

} // namespace nbrmat

#endif // NBRMAT_RATIONAL_HPP
