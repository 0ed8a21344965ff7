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
#include <functional>
#include <string>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/rational.hpp"
#include "weightscape/strata.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape {

/// The blow-up towers and classical compactifications realized by particular
/// weight chambers in genus 0.
struct NamedFamily {
  enum class Tag { KapranovW, KapranovX, KeelY, LosevManin, None };
  Tag tag = Tag::None;
  int n = 0;
  int r = 0;  // KapranovW
  int s = 0;  // KapranovW
  int k = 0;  // KapranovX, KeelY

  static NamedFamily W(int n, int r, int s) { return {Tag::KapranovW, n, r, s, 0}; }
  static NamedFamily X(int n, int k) { return {Tag::KapranovX, n, 0, 0, k}; }
  static NamedFamily Y(int n, int k) { return {Tag::KeelY, n, 0, 0, k}; }
  static NamedFamily LM(int n) { return {Tag::LosevManin, n, 0, 0, 0}; }

  /// "W(r,s)", "X(k)", "Y(k)", "LM" or "None".
  std::string str() const {
    switch (tag) {
      case Tag::KapranovW: return "W(" + std::to_string(r) + "," + std::to_string(s) + ")";
      case Tag::KapranovX: return "X(" + std::to_string(k) + ")";
      case Tag::KeelY: return "Y(" + std::to_string(k) + ")";
      case Tag::LosevManin: return "LM";
      case Tag::None: return "None";
    }
    return "?";
  }

  friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
};

inline NamedFamily parse_family(const std::string& text, int n) {
  auto fail = [&] { return Error(ErrorKind::ParseError, "unknown family tag '" + text + "'"); };
  if (text == "LM") return NamedFamily::LM(n);
  if (text == "None") return {NamedFamily::Tag::None, n};
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') throw fail();
  std::string inner = text.substr(2, text.size() - 3);
  try {
    if (text[0] == 'W') {
      auto comma = inner.find(',');
      if (comma == std::string::npos) throw fail();
      return NamedFamily::W(n, std::stoi(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1)));
    }
    if (text[0] == 'X') return NamedFamily::X(n, std::stoi(inner));
    if (text[0] == 'Y') return NamedFamily::Y(n, std::stoi(inner));
  } catch (const std::logic_error&) {
    throw fail();
  }
  throw fail();
}

inline void check_family(const NamedFamily& f) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::InvalidArgument, f.str() + " at n = " + std::to_string(f.n) + ": " + why);
  };
  const int n = f.n;
  switch (f.tag) {
    case NamedFamily::Tag::KapranovW:
      if (f.r < 1 || f.r > n - 3) throw bad("need 1 <= r <= n-3");
      if (f.s < 1 || f.s > n - f.r - 2) throw bad("need 1 <= s <= n-r-2");
      break;
    case NamedFamily::Tag::KapranovX:
      if (n < 4 || f.k < 0 || f.k > n - 4) throw bad("need 0 <= k <= n-4");
      break;
    case NamedFamily::Tag::KeelY:
      if (n < 5 || f.k < 0 || f.k > 2 * n - 9) throw bad("need n >= 5 and 0 <= k <= 2n-9");
      break;
    case NamedFamily::Tag::LosevManin:
      if (n < 3) throw bad("need n >= 3");
      break;
    case NamedFamily::Tag::None:
      throw bad("no weights for None");
  }
}

namespace detail {

inline Rational frac(std::int64_t p, std::int64_t q) { return Rational(p, q); }

// Weight of the first three markings in the Keel tower. The first sequence
// never blows up the diagonals, so its light markings must all fit together:
// (n-3)(1-a) <= 1. 3/4 does that up to n = 7.
inline Rational keel_heavy_weight(int n) {
  return n <= 7 ? frac(3, 4) : Rational(1) - frac(1, n - 3);
}

}  // namespace detail

/// Canonical representative of a named chamber.
inline WeightData weights_for(const NamedFamily& f) {
  check_family(f);
  const int n = f.n;
  std::vector<Rational> w;
  switch (f.tag) {
    case NamedFamily::Tag::KapranovW: {
      const int m = n - f.r - 1;
      w.assign(static_cast<std::size_t>(m), detail::frac(1, m));
      w.push_back(detail::frac(f.s, m));
      w.insert(w.end(), static_cast<std::size_t>(f.r), Rational(1));
      break;
    }
    case NamedFamily::Tag::KapranovX:
      w.assign(static_cast<std::size_t>(n - 1), detail::frac(1, n - 2 - f.k));
      w.push_back(Rational(1));
      break;
    case NamedFamily::Tag::KeelY: {
      Rational a = detail::keel_heavy_weight(n);
      Rational eps = f.k <= n - 4 ? (Rational(1) - a) / Rational(n - 3 - f.k)
                                  : detail::frac(1, n - 3 - (f.k - (n - 4)));
      w.assign(3, a);
      w.insert(w.end(), static_cast<std::size_t>(n - 3), eps);
      break;
    }
    case NamedFamily::Tag::LosevManin:
      w = {Rational(1), Rational(1)};
      w.insert(w.end(), static_cast<std::size_t>(n - 2), detail::frac(1, n - 2));
      break;
    case NamedFamily::Tag::None:
      break;
  }
  return validate(0, std::move(w), WeightMode::Strict);
}

namespace detail {

inline Subset range_subset(int from, int to) {  // markings from..to, 1-based
  Subset s = 0;
  for (int m = from; m <= to; ++m) s |= Subset{1} << (m - 1);
  return s;
}

// Calls fn on every nonempty subset of `universe`.
inline bool all_subsets(Subset universe, const std::function<bool(Subset)>& fn) {
  for (Subset s = universe; s != 0; s = (s - 1) & universe)
    if (!fn(s)) return false;
  return true;
}

inline bool matches_x(const WeightData& a, int k) {
  const int n = static_cast<int>(a.n());
  const Rational one(1);
  for (int i = 0; i < n - 1; ++i)
    if (a[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(n - 1)] <= one) return false;
  return all_subsets(range_subset(1, n - 1), [&](Subset l) {
    return (a.sum(l) <= one) == (subset_size(l) <= n - k - 2);
  });
}

inline bool keel_heavy_pairs(const WeightData& a) {
  const Rational one(1);
  return a[0] + a[1] > one && a[0] + a[2] > one && a[1] + a[2] > one;
}

inline bool matches_y(const WeightData& a, int k) {
  const int n = static_cast<int>(a.n());
  const Rational one(1);
  if (!keel_heavy_pairs(a)) return false;
  const Subset light = range_subset(4, n);
  if (k <= n - 4) {
    for (std::size_t i = 0; i < 3; ++i)
      if (!all_subsets(light, [&](Subset j) {
            return (a[i] + a.sum(j) <= one) == (subset_size(j) <= n - 3 - k);
          }))
        return false;
    return true;
  }
  const int kk = k - (n - 4);
  return all_subsets(light, [&](Subset j) {
    return (a.sum(j) <= one) == (subset_size(j) <= n - 3 - kk);
  });
}

inline bool matches_lm(const WeightData& a) {
  const std::size_t n = a.n();
  const Rational one(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0 && a[0] + a[i] <= one) return false;
    if (i != 1 && a[1] + a[i] <= one) return false;
  }
  return all_subsets(range_subset(3, static_cast<int>(n)),
                     [&](Subset j) { return a.sum(j) <= one; });
}

// Which fine-wall subsets weigh at most one: this decides A-stability of
// every dual tree.
inline std::vector<bool> light_pattern(const WeightData& a) {
  std::vector<bool> out;
  const Subset all = full_subset(a.n());
  for (Subset s = 1; s <= all && s != 0; ++s) {
    int size = subset_size(s);
    if (size >= 2 && size <= static_cast<int>(a.n()) - 2) out.push_back(a.sum(s) <= Rational(1));
  }
  return out;
}

}  // namespace detail

/// All named families whose defining inequalities A satisfies; {None} when
/// there are none. X, Y and LM use their printed inequality lists; W(r,s) is
/// matched by agreeing with the tower weights on which fine-wall subsets weigh
/// at most one.
inline std::vector<NamedFamily> classify(const WeightData& a) {
  if (a.genus != 0) throw Error(ErrorKind::InvalidArgument, "named families are genus 0");
  validate(a.genus, a.weights, WeightMode::Strict);
  const int n = static_cast<int>(a.n());
  std::vector<NamedFamily> out;
  if (n >= 4) {
    auto pattern = detail::light_pattern(a);
    for (int r = 1; r <= n - 3; ++r)
      for (int s = 1; s <= n - r - 2; ++s)
        if (detail::light_pattern(weights_for(NamedFamily::W(n, r, s))) == pattern)
          out.push_back(NamedFamily::W(n, r, s));
    for (int k = 0; k <= n - 4; ++k)
      if (detail::matches_x(a, k)) out.push_back(NamedFamily::X(n, k));
  }
  if (n >= 5)
    for (int k = 0; k <= 2 * n - 9; ++k)
      if (detail::matches_y(a, k)) out.push_back(NamedFamily::Y(n, k));
  if (n >= 3 && detail::matches_lm(a)) out.push_back(NamedFamily::LM(n));
  if (out.empty()) out.push_back({NamedFamily::Tag::None, n});
  return out;
}

enum class Tower { KapranovX, KeelY, KapranovW };

inline Tower parse_tower(const std::string& s) {
  if (s == "X" || s == "kapranov-x") return Tower::KapranovX;
  if (s == "Y" || s == "keel-y") return Tower::KeelY;
  if (s == "W" || s == "kapranov-w") return Tower::KapranovW;
  throw Error(ErrorKind::InvalidArgument, "tower must be X, Y or W");
}

struct BlowupStep {
  NamedFamily source;  // the finer space
  NamedFamily target;
  std::vector<DivisorClassification> contracted;  // fate == Contracted only
  std::size_t becomes_coincidence = 0;
  bool isomorphism = false;
  std::size_t exceptional_count() const { return contracted.size(); }
};

/// The tower from its top space down to its base, with the divisors each
/// reduction contracts.
inline std::vector<BlowupStep> blowup_sequence(Tower tower, int n) {
  std::vector<NamedFamily> chain;  // top first
  switch (tower) {
    case Tower::KapranovX:
      if (n < 5) throw Error(ErrorKind::InvalidArgument, "X tower needs n >= 5");
      for (int k = n - 4; k >= 0; --k) chain.push_back(NamedFamily::X(n, k));
      break;
    case Tower::KeelY:
      if (n < 5) throw Error(ErrorKind::InvalidArgument, "Y tower needs n >= 5");
      for (int k = 2 * n - 9; k >= 0; --k) chain.push_back(NamedFamily::Y(n, k));
      break;
    case Tower::KapranovW:
      if (n < 5) throw Error(ErrorKind::InvalidArgument, "W tower needs n >= 5");
      for (int r = 1; r <= n - 3; ++r)
        for (int s = 1; s <= n - r - 2; ++s) chain.push_back(NamedFamily::W(n, r, s));
      std::reverse(chain.begin(), chain.end());
      break;
  }
  std::vector<BlowupStep> steps;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    WeightData a = weights_for(chain[i]);
    WeightData b = weights_for(chain[i + 1]);
    BlowupStep step{chain[i], chain[i + 1], {}, 0, is_reduction_iso(a, b)};
    for (auto& c : contracted_divisors(a, b)) {
      if (c.fate == DivisorFate::Contracted) step.contracted.push_back(std::move(c));
      else if (c.fate == DivisorFate::BecomesCoincidence) ++step.becomes_coincidence;
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace weightscape
