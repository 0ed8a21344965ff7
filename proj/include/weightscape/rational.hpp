// Copyright 2026 The Weightscape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "weightscape/error.hpp"

namespace weightscape {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Storage is 64-bit; every intermediate is computed in 128 bits and reduced
/// before narrowing, so a result that does not fit raises ErrorKind::Overflow
/// instead of wrapping. The weight systems handled here have tiny
/// denominators, so the bound is never approached in practice.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  /// "p/q" in lowest terms, or "p" when q = 1.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return Error(ErrorKind::ParseError,
                   "not a rational: '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view part) -> std::int64_t {
      if (part.empty()) throw fail();
      std::size_t pos = 0;
      bool negative = false;
      if (part[0] == '-' || part[0] == '+') {
        negative = part[0] == '-';
        pos = 1;
      }
      if (pos == part.size()) throw fail();
      Wide value = 0;
      for (; pos < part.size(); ++pos) {
        char c = part[pos];
        if (c < '0' || c > '9') throw fail();
        value = value * 10 + (c - '0');
        if (value > INT64_MAX) throw fail();
      }
      return static_cast<std::int64_t>(negative ? -value : value);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                     Wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                     Wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-Wide(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using Wide = __int128;

  static Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(Wide num, Wide den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Wide g = wide_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX)
      throw Error(ErrorKind::Overflow, "rational exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Sum of the entries picked out by a bitmask (bit j selects index j).
template <class Range>
Rational masked_sum(const Range& values, std::uint64_t mask) {
  Rational total;
  std::size_t j = 0;
  for (const auto& v : values) {
    if (mask >> j & 1) total += v;
    ++j;
  }
  return total;
}

}  // namespace weightscape

template <>
struct std::hash<weightscape::Rational> {
  std::size_t operator()(const weightscape::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^
           std::hash<std::int64_t>{}(r.den());
  }
};
