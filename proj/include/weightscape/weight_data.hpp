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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/rational.hpp"

namespace weightscape {

/// Subsets of marking indices are bitmasks: bit j stands for marking j+1.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxMarkings = 63;

inline std::vector<int> subset_members(Subset s) {
  std::vector<int> out;
  for (int j = 0; s != 0; ++j, s >>= 1)
    if (s & 1) out.push_back(j + 1);
  return out;
}

inline Subset subset_from(const std::vector<int>& members) {
  Subset s = 0;
  for (int m : members) {
    if (m < 1 || m > static_cast<int>(kMaxMarkings))
      throw Error(ErrorKind::InvalidArgument,
                  "marking index out of range: " + std::to_string(m));
    s |= Subset{1} << (m - 1);
  }
  return s;
}

inline int subset_size(Subset s) { return std::popcount(s); }

inline Subset full_subset(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

/// "{1,3,4}"
inline std::string subset_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int m : subset_members(s)) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

enum class WeightMode {
  Strict,        // 0 < a_j <= 1, 2g-2+sum > 0
  ZeroAllowed,   // 0 <= a_j <= 1, 2g-2+sum > 0
  Boundary,      // g = 0, 0 < a_j < 1, sum = 2
};

struct WeightData {
  int genus = 0;
  std::vector<Rational> weights;

  std::size_t n() const noexcept { return weights.size(); }
  const Rational& operator[](std::size_t index) const { return weights[index]; }
  Rational total() const {
    Rational s;
    for (const auto& w : weights) s += w;
    return s;
  }
  Rational sum(Subset s) const { return masked_sum(weights, s); }
  /// 2g - 2 + sum of weights.
  Rational log_degree() const { return Rational(2 * genus - 2) + total(); }

  friend bool operator==(const WeightData&, const WeightData&) = default;
};

inline WeightData validate(int genus, std::vector<Rational> weights,
                           WeightMode mode = WeightMode::Strict) {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "genus must be >= 0");
  if (weights.size() > kMaxMarkings)
    throw Error(ErrorKind::InvalidArgument, "too many markings");
  const Rational zero, one(1);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const Rational& a = weights[j];
    bool ok = false;
    switch (mode) {
      case WeightMode::Strict: ok = zero < a && a <= one; break;
      case WeightMode::ZeroAllowed: ok = zero <= a && a <= one; break;
      case WeightMode::Boundary: ok = zero < a && a < one; break;
    }
    if (!ok)
      throw Error(ErrorKind::WeightOutOfRange,
                  "weight " + std::to_string(j + 1) + " = " + a.str() +
                      " is outside the admissible range");
  }
  WeightData data{genus, std::move(weights)};
  if (mode == WeightMode::Boundary) {
    if (genus != 0)
      throw Error(ErrorKind::InvalidArgument, "boundary weights require genus 0");
    if (data.total() != Rational(2))
      throw Error(ErrorKind::BoundarySumMismatch,
                  "weights sum to " + data.total().str() + ", expected 2");
  } else if (data.log_degree() <= zero) {
    throw Error(ErrorKind::DegreeNotPositive,
                "2g-2+sum = " + data.log_degree().str() + " is not positive");
  }
  return data;
}

/// Raises WeightsNotDominated unless lower[j] <= upper[j] for all j.
inline void require_dominated(const WeightData& lower, const WeightData& upper) {
  if (lower.n() != upper.n() || lower.genus != upper.genus)
    throw Error(ErrorKind::InvalidArgument, "weight data of different shape");
  for (std::size_t j = 0; j < lower.n(); ++j)
    if (lower[j] > upper[j])
      throw Error(ErrorKind::WeightsNotDominated,
                  "weight " + std::to_string(j + 1) + ": " + lower[j].str() +
                      " > " + upper[j].str());
}

}  // namespace weightscape
