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

#include <algorithm>
#include <string>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/rational.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape {

/// Fractional linearization O(t_1, ..., t_n) on (P^1)^n, normalized to sum 2
/// with every t_j in (0, 1).
class Linearization {
 public:
  explicit Linearization(std::vector<Rational> t) : t_(std::move(t)) {
    validate(0, t_, WeightMode::Boundary);
  }

  std::size_t n() const noexcept { return t_.size(); }
  const std::vector<Rational>& weights() const noexcept { return t_; }
  const Rational& operator[](std::size_t j) const { return t_[j]; }
  Rational sum(Subset s) const { return masked_sum(t_, s); }

  friend bool operator==(const Linearization&, const Linearization&) = default;

 private:
  std::vector<Rational> t_;
};

/// Which points coincide; nothing else about the configuration matters.
struct ConfigType {
  std::vector<Subset> classes;
};

inline void check_config(const ConfigType& c, std::size_t n) {
  Subset seen = 0;
  for (Subset s : c.classes) {
    if (s == 0 || (seen & s) != 0)
      throw Error(ErrorKind::InvalidArgument, "configuration classes must be disjoint and nonempty");
    seen |= s;
  }
  if (seen != full_subset(n))
    throw Error(ErrorKind::InvalidArgument,
                "configuration does not partition 1.." + std::to_string(n));
}

enum class GitStability { Stable, StrictlySemistable, Unstable };

inline const char* to_string(GitStability s) {
  switch (s) {
    case GitStability::Stable: return "Stable";
    case GitStability::StrictlySemistable: return "StrictlySemistable";
    case GitStability::Unstable: return "Unstable";
  }
  return "?";
}

/// Points may share a position only while their weights total less than one
/// (stable) or at most one (semistable).
inline GitStability stability(const ConfigType& config, const Linearization& t) {
  check_config(config, t.n());
  const Rational one(1);
  bool boundary = false;
  for (Subset s : config.classes) {
    Rational w = t.sum(s);
    if (w > one) return GitStability::Unstable;
    if (w == one) boundary = true;
  }
  return boundary ? GitStability::StrictlySemistable : GitStability::Stable;
}

/// No subset of the linearization weights sums to exactly one.
inline bool is_typical(const Linearization& t) {
  const Subset all = full_subset(t.n());
  for (Subset s = 1; s <= all && s != 0; ++s)
    if (t.sum(s) == Rational(1)) return false;
  return true;
}

/// Subsets with weight exactly one, one per complement pair; the representative
/// is the member containing index 1.
inline std::vector<Subset> strictly_semistable_types(const Linearization& t) {
  std::vector<Subset> out;
  const Subset all = full_subset(t.n());
  for (Subset s = 1; s <= all; s += 2)
    if (t.sum(s) == Rational(1)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb) return sa < sb;
    return subset_members(a) < subset_members(b);
  });
  return out;
}

/// Rescales weight data with sum >= 2 and entries in (0, 1) onto the sum-2
/// boundary.
inline Linearization tau(const WeightData& b) {
  if (b.genus != 0) throw Error(ErrorKind::DomainViolation, "tau is defined for genus 0");
  for (std::size_t j = 0; j < b.n(); ++j)
    if (b[j] <= Rational(0) || b[j] >= Rational(1))
      throw Error(ErrorKind::DomainViolation,
                  "weight " + std::to_string(j + 1) + " = " + b[j].str() + " is not in (0, 1)");
  Rational total = b.total();
  if (total < Rational(2))
    throw Error(ErrorKind::DomainViolation, "weights sum to " + total.str() + " < 2");
  Rational half = total / Rational(2);
  std::vector<Rational> t;
  t.reserve(b.n());
  for (const auto& w : b.weights) t.push_back(w / half);
  return Linearization(std::move(t));
}

struct QuotientMatch {
  bool matches = true;
  /// Subsets (|S| >= 2) where the two sides disagree.
  std::vector<Subset> mismatches;
  /// Subsets where sum_S a = 1 exactly; excluded from the verdict.
  std::vector<Subset> ambiguous;
};

/// Compares the coincidences allowed on a smooth A-stable curve with the
/// T-stable configurations: sum_S a <= 1 against sum_S t < 1, for |S| >= 2.
/// Subsets with sum_S a = 1 read differently under the two inequality
/// conventions, so they are reported and left out of the verdict.
inline QuotientMatch chamber_matches_quotient(const WeightData& a, const Linearization& t) {
  if (a.n() != t.n())
    throw Error(ErrorKind::InvalidArgument, "weight data and linearization differ in n");
  if (a.genus != 0) throw Error(ErrorKind::InvalidArgument, "genus 0 only");
  validate(a.genus, a.weights, WeightMode::Strict);
  if (!is_typical(t)) throw Error(ErrorKind::AtypicalLinearization, "linearization is atypical");
  QuotientMatch result;
  const Rational one(1);
  const Subset all = full_subset(a.n());
  for (Subset s = 1; s <= all && s != 0; ++s) {
    if (subset_size(s) < 2) continue;
    Rational wa = a.sum(s);
    if (wa == one) {
      result.ambiguous.push_back(s);
      continue;
    }
    if ((wa < one) != (t.sum(s) < one)) result.mismatches.push_back(s);
  }
  result.matches = result.mismatches.empty();
  return result;
}

}  // namespace weightscape
