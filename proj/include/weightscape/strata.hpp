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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weightscape/chambers.hpp"
#include "weightscape/error.hpp"
#include "weightscape/marked_tree.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape {

struct Stratum {
  MarkedTree tree;
  int codimension = 0;
};

namespace detail {

// Set partitions of {0..n-1} as restricted growth strings; block 0 always
// holds element 0.
inline void for_each_set_partition(std::size_t n,
                                   const std::function<void(const std::vector<Subset>&)>& fn) {
  std::vector<int> rgs(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
    if (i == n) {
      std::vector<Subset> parts(static_cast<std::size_t>(blocks), 0);
      for (std::size_t j = 0; j < n; ++j) parts[static_cast<std::size_t>(rgs[j])] |= Subset{1} << j;
      fn(parts);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(1, 1);
}

// Tree from a laminar family of clades over class indices 1..m-1 (class 0 is
// at the root).
inline MarkedTree tree_from_clades(const std::vector<Subset>& classes,
                                   const std::vector<Subset>& clades) {
  MarkedTree t;
  const std::size_t k = clades.size();
  t.vertices.push_back({0, 0, {}});
  for (std::size_t c = 0; c < k; ++c) t.vertices.push_back({static_cast<int>(c + 1), 0, {}});
  auto smallest_containing = [&](Subset bits, std::optional<std::size_t> skip) -> int {
    int best = 0;
    int best_size = 1 << 30;
    for (std::size_t c = 0; c < k; ++c) {
      if (skip && *skip == c) continue;
      if ((clades[c] & bits) == bits && subset_size(clades[c]) < best_size) {
        best = static_cast<int>(c + 1);
        best_size = subset_size(clades[c]);
      }
    }
    return best;
  };
  for (std::size_t c = 0; c < k; ++c)
    t.edges.emplace_back(smallest_containing(clades[c], c), static_cast<int>(c + 1));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    int host = i == 0 ? 0 : smallest_containing(Subset{1} << i, std::nullopt);
    t.vertices[static_cast<std::size_t>(host)].classes.push_back(
        {subset_members(classes[i]), false, -1});
  }
  return normalized(std::move(t));
}

}  // namespace detail

/// Every genus-0 dual tree on markings 1..n whose vertices carry at least three
/// special points (nodes plus coincidence classes), with codimension at most
/// max_codim. This is the space of all combinatorial types any weight data can
/// see; `admissible_class` and `admissible_side` let callers prune classes and
/// edge splits early.
inline std::vector<MarkedTree> enumerate_tree_shapes(
    std::size_t n, int max_codim,
    const std::function<bool(Subset)>& admissible_class = {},
    const std::function<bool(Subset)>& admissible_side = {}) {
  std::vector<MarkedTree> out;
  detail::for_each_set_partition(n, [&](const std::vector<Subset>& classes) {
    const std::size_t m = classes.size();
    int class_codim = static_cast<int>(n - m);
    if (class_codim > max_codim) return;
    if (admissible_class)
      for (Subset c : classes)
        if (subset_size(c) > 1 && !admissible_class(c)) return;
    if (m < 3) return;
    const Subset all = full_subset(m);
    auto markings_of = [&](Subset class_bits) {
      Subset s = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (class_bits >> i & 1) s |= classes[i];
      return s;
    };
    std::vector<Subset> candidates;
    for (Subset c = 2; c <= all; c += 2) {  // never contains class 0
      int size = subset_size(c);
      if (size < 2 || static_cast<int>(m) - size < 2) continue;
      if (admissible_side) {
        Subset side = markings_of(c);
        if (!admissible_side(side) || !admissible_side(full_subset(n) & ~side)) continue;
      }
      candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end(), [](Subset a, Subset b) {
      int sa = subset_size(a), sb = subset_size(b);
      if (sa != sb) return sa > sb;
      return subset_members(a) < subset_members(b);
    });
    const int max_edges = std::min(max_codim - class_codim, static_cast<int>(m) - 3);
    std::vector<Subset> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      out.push_back(detail::tree_from_clades(classes, chosen));
      if (static_cast<int>(chosen.size()) >= max_edges) return;
      for (std::size_t i = start; i < candidates.size(); ++i) {
        Subset c = candidates[i];
        bool compatible = std::all_of(chosen.begin(), chosen.end(), [c](Subset d) {
          return (c & d) == 0 || (c & d) == c || (c & d) == d;
        });
        if (!compatible) continue;
        chosen.push_back(c);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  });
  return out;
}

/// All A-stable genus-0 strata of codimension <= max_codim, ordered by
/// codimension and then by generation order.
inline std::vector<Stratum> enumerate_strata(const WeightData& a, int max_codim,
                                             std::size_t limit = kDefaultEnumerationLimit) {
  if (a.genus != 0)
    throw Error(ErrorKind::InvalidArgument, "stratum enumeration is genus 0 only");
  validate(a.genus, a.weights, WeightMode::Strict);
  if (a.n() > limit)
    throw Error(ErrorKind::LimitExceeded,
                "n = " + std::to_string(a.n()) + " exceeds enumeration limit " +
                    std::to_string(limit));
  const Rational one(1);
  auto shapes = enumerate_tree_shapes(
      a.n(), max_codim, [&](Subset c) { return a.sum(c) <= one; },
      [&](Subset side) { return a.sum(side) > one; });
  std::vector<Stratum> out;
  for (auto& t : shapes)
    if (is_stable(t, a)) out.push_back({t, t.codimension()});
  std::stable_sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    return x.codimension < y.codimension;
  });
  return out;
}

struct BoundaryDivisor {
  enum class Kind { Nodal, Coincidence };
  Kind kind = Kind::Nodal;
  Subset subset = 0;      // Nodal: the side holding marking 1; Coincidence: the pair
  Subset complement = 0;  // Nodal only

  std::string str() const {
    return kind == Kind::Nodal ? "D" + subset_string(subset) + "|" + subset_string(complement)
                               : "C" + subset_string(subset);
  }
  friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;
};

namespace detail {

inline bool by_size_then_members(Subset a, Subset b) {
  int sa = subset_size(a), sb = subset_size(b);
  if (sa != sb) return sa < sb;
  return subset_members(a) < subset_members(b);
}

}  // namespace detail

/// Nodal divisors (unordered partitions, both sides weighing more than one)
/// followed by coincidence divisors (pairs weighing at most one).
inline std::vector<BoundaryDivisor> boundary_divisors(const WeightData& a) {
  if (a.genus != 0) throw Error(ErrorKind::InvalidArgument, "boundary divisors are genus 0 only");
  validate(a.genus, a.weights, WeightMode::Strict);
  const Subset all = full_subset(a.n());
  const Rational one(1);
  std::vector<Subset> sides, pairs;
  for (Subset s = 1; s < all; s += 2)  // sides containing marking 1
    if (a.sum(s) > one && a.sum(all & ~s) > one) sides.push_back(s);
  for (Subset s = 1; s <= all; ++s)
    if (subset_size(s) == 2 && a.sum(s) <= one) pairs.push_back(s);
  std::sort(sides.begin(), sides.end(), detail::by_size_then_members);
  std::sort(pairs.begin(), pairs.end(), detail::by_size_then_members);
  std::vector<BoundaryDivisor> out;
  for (Subset s : sides) out.push_back({BoundaryDivisor::Kind::Nodal, s, all & ~s});
  for (Subset s : pairs) out.push_back({BoundaryDivisor::Kind::Coincidence, s, 0});
  return out;
}

/// The codimension-one stratum a divisor stands for.
inline MarkedTree divisor_tree(const BoundaryDivisor& d, std::size_t n) {
  MarkedTree t;
  if (d.kind == BoundaryDivisor::Kind::Coincidence) {
    Vertex v{0, 0, {}};
    v.classes.push_back({subset_members(d.subset)});
    for (std::size_t m = 1; m <= n; ++m)
      if (!(d.subset >> (m - 1) & 1)) v.classes.push_back({{static_cast<int>(m)}});
    t.vertices.push_back(std::move(v));
  } else {
    Vertex v0{0, 0, {}}, v1{1, 0, {}};
    for (int m : subset_members(d.subset)) v0.classes.push_back({{m}});
    for (int m : subset_members(d.complement)) v1.classes.push_back({{m}});
    t.vertices = {std::move(v0), std::move(v1)};
    t.edges = {{0, 1}};
  }
  return normalized(std::move(t));
}

enum class DivisorFate { Preserved, Contracted, BecomesCoincidence };

inline const char* to_string(DivisorFate f) {
  switch (f) {
    case DivisorFate::Preserved: return "PRESERVED";
    case DivisorFate::Contracted: return "CONTRACTED";
    case DivisorFate::BecomesCoincidence: return "BECOMES_COINCIDENCE";
  }
  return "?";
}

struct DivisorClassification {
  BoundaryDivisor divisor;
  DivisorFate fate = DivisorFate::Preserved;
  Subset light_side = 0;  // side whose reduced weight is <= 1 (I), when not preserved
  /// For contracted divisors: the reduced weights of the heavy side in index
  /// order, followed by the total reduced weight of the light side.
  std::vector<Rational> target_weights;
};

/// What the reduction A -> B does to each boundary divisor of A.
inline std::vector<DivisorClassification> contracted_divisors(const WeightData& a,
                                                              const WeightData& b) {
  require_dominated(b, a);
  validate(b.genus, b.weights, WeightMode::ZeroAllowed);
  const Rational one(1);
  std::vector<DivisorClassification> out;
  for (const auto& d : boundary_divisors(a)) {
    DivisorClassification c{d, DivisorFate::Preserved, 0, {}};
    if (d.kind == BoundaryDivisor::Kind::Nodal) {
      for (Subset side : {d.subset, d.complement}) {
        if (b.sum(side) > one) continue;
        c.light_side = side;
        if (subset_size(side) > 2) {
          c.fate = DivisorFate::Contracted;
          Subset heavy = full_subset(a.n()) & ~side;
          for (int m : subset_members(heavy)) c.target_weights.push_back(b[static_cast<std::size_t>(m - 1)]);
          c.target_weights.push_back(b.sum(side));
        } else {
          c.fate = DivisorFate::BecomesCoincidence;
        }
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// True iff every subset crossing from weight > 1 under A to <= 1 under B is a
/// pair.
inline bool is_reduction_iso(const WeightData& a, const WeightData& b) {
  require_dominated(b, a);
  const Rational one(1);
  const Subset all = full_subset(a.n());
  for (Subset s = 1; s <= all && s != 0; ++s)
    if (a.sum(s) > one && b.sum(s) <= one && subset_size(s) != 2) return false;
  return true;
}

/// Sum over I exceeds one while every proper subset weighs at most one.
inline bool is_blowup_profile(const WeightData& a, Subset subset) {
  if (subset_size(subset) < 3)
    throw Error(ErrorKind::InvalidArgument, "blow-up profile needs |I| >= 3");
  if ((subset & ~full_subset(a.n())) != 0)
    throw Error(ErrorKind::InvalidArgument, "subset outside 1..n");
  const Rational one(1);
  if (a.sum(subset) <= one) return false;
  // sums are monotone in nonnegative weights: the maximal proper subsets decide
  for (Subset rest = subset; rest != 0; rest &= rest - 1) {
    Subset bit = rest & (~rest + 1);
    if (a.sum(subset & ~bit) > one) return false;
  }
  return true;
}

struct OrbitCount {
  std::size_t nodal = 0;
  std::size_t coincidence = 0;
  std::size_t total() const { return nodal + coincidence; }
};

/// Boundary divisors counted up to permutations inside each block of equal
/// weights.
inline OrbitCount symmetrized_boundary_count(const WeightData& a,
                                             const std::vector<Subset>& blocks) {
  Subset covered = 0;
  for (Subset b : blocks) {
    if (b == 0 || (covered & b) != 0)
      throw Error(ErrorKind::InvalidArgument, "blocks must be disjoint and nonempty");
    covered |= b;
    auto members = subset_members(b);
    for (int m : members) {
      if (m > static_cast<int>(a.n())) throw Error(ErrorKind::InvalidArgument, "block index beyond n");
      if (a[static_cast<std::size_t>(m - 1)] != a[static_cast<std::size_t>(members.front() - 1)])
        throw Error(ErrorKind::UnequalWeightsInBlock,
                    "block " + subset_string(b) + " mixes different weights");
    }
  }
  if (covered != full_subset(a.n()))
    throw Error(ErrorKind::InvalidArgument, "blocks must cover 1..n");
  auto profile = [&](Subset s) {
    std::vector<int> counts;
    for (Subset b : blocks) counts.push_back(subset_size(s & b));
    return counts;
  };
  std::set<std::pair<std::vector<int>, std::vector<int>>> nodal;
  std::set<std::vector<int>> coincidence;
  for (const auto& d : boundary_divisors(a)) {
    if (d.kind == BoundaryDivisor::Kind::Nodal) {
      auto x = profile(d.subset), y = profile(d.complement);
      if (y < x) std::swap(x, y);
      nodal.emplace(x, y);
    } else {
      coincidence.insert(profile(d.subset));
    }
  }
  return {nodal.size(), coincidence.size()};
}

}  // namespace weightscape
