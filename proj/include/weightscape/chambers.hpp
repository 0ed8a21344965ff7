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
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/linear_system.hpp"
#include "weightscape/rational.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape {

enum class Granularity { Coarse, Fine };

inline const char* to_string(Granularity g) {
  return g == Granularity::Fine ? "fine" : "coarse";
}

inline Granularity parse_granularity(const std::string& s) {
  if (s == "fine") return Granularity::Fine;
  if (s == "coarse") return Granularity::Coarse;
  throw Error(ErrorKind::InvalidArgument, "granularity must be fine or coarse");
}

/// The hyperplane sum_{j in subset} a_j = 1.
struct Wall {
  Subset subset = 0;
  Granularity granularity = Granularity::Fine;
  friend bool operator==(const Wall&, const Wall&) = default;
};

enum class Position : char { Below = '-', On = '0', Above = '+' };

struct SignVector {
  int genus = 0;
  std::size_t n = 0;
  Granularity granularity = Granularity::Fine;
  std::vector<Wall> walls;
  std::vector<Position> positions;

  bool has_on() const {
    return std::find(positions.begin(), positions.end(), Position::On) !=
           positions.end();
  }
  /// One character per wall: '+' above, '-' below, '0' on.
  std::string code() const {
    std::string s;
    s.reserve(positions.size());
    for (auto p : positions) s.push_back(static_cast<char>(p));
    return s;
  }
  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.genus == b.genus && a.n == b.n && a.granularity == b.granularity &&
           a.positions == b.positions;
  }
};

struct Chamber {
  std::vector<Position> positions;
  WeightData representative;
};

struct ChamberSet {
  int genus = 0;
  std::size_t n = 0;
  Granularity granularity = Granularity::Fine;
  std::vector<Wall> walls;
  std::vector<Chamber> chambers;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

/// Size range [lo, hi] of wall subsets; empty when lo > hi.
inline std::pair<int, int> wall_size_range(std::size_t n, Granularity g) {
  int ni = static_cast<int>(n);
  return g == Granularity::Fine ? std::pair{2, ni - 2} : std::pair{3, ni - 3};
}

/// Open domain: 0 < a_j <= 1, sum a_j > 2 - 2g.
inline ConstraintSystem domain_system(int genus, std::size_t n) {
  ConstraintSystem sys(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = Rational(1);
    sys.add_greater(e, Rational(0));
    sys.add(e, Relation::LessEqual, Rational(1));
  }
  sys.add_greater(std::vector<Rational>(n, Rational(1)), Rational(2 - 2 * genus));
  return sys;
}

inline std::vector<Rational> indicator(Subset s, std::size_t n) {
  std::vector<Rational> v(n);
  for (std::size_t j = 0; j < n; ++j)
    if (s >> j & 1) v[j] = Rational(1);
  return v;
}

namespace detail {

inline void check_domain_params(int genus, std::size_t n) {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "genus must be >= 0");
  if (genus == 0 && n < 3)
    throw Error(ErrorKind::InvalidArgument, "genus 0 needs n >= 3");
  if (genus > 0 && n < 1)
    throw Error(ErrorKind::InvalidArgument, "need n >= 1");
  if (n > kMaxMarkings) throw Error(ErrorKind::InvalidArgument, "n too large");
}

inline std::vector<Wall> compute_walls(int genus, std::size_t n, Granularity g) {
  std::vector<Wall> out;
  auto [lo, hi] = wall_size_range(n, g);
  if (lo > hi) return out;
  std::vector<Subset> candidates;
  for (Subset s = 1; s <= full_subset(n) && s != 0; ++s) {
    int size = subset_size(s);
    if (size >= lo && size <= hi) candidates.push_back(s);
  }
  // by size, then lexicographic on the sorted member lists
  std::sort(candidates.begin(), candidates.end(), [](Subset a, Subset b) {
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb) return sa < sb;
    return subset_members(a) < subset_members(b);
  });
  ConstraintSystem base = domain_system(genus, n);
  for (Subset s : candidates) {
    ConstraintSystem sys = base;
    sys.add(indicator(s, n), Relation::Equal, Rational(1));
    if (is_feasible(sys)) out.push_back({s, g});
  }
  return out;
}

}  // namespace detail

/// Every subset in the granularity's size range whose hyperplane meets the
/// open domain, sorted by size then lexicographically.
inline const std::vector<Wall>& walls(int genus, std::size_t n, Granularity g) {
  detail::check_domain_params(genus, n);
  static std::mutex mu;
  static std::map<std::tuple<int, std::size_t, Granularity>, std::vector<Wall>> memo;
  std::lock_guard lock(mu);
  auto key = std::tuple{genus, n, g};
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, detail::compute_walls(genus, n, g)).first;
  return it->second;
}

inline Position position(const WeightData& a, Subset s) {
  auto c = a.sum(s) <=> Rational(1);
  return c < 0 ? Position::Below : c > 0 ? Position::Above : Position::On;
}

inline SignVector locate(const WeightData& a, Granularity g) {
  SignVector sv{a.genus, a.n(), g, walls(a.genus, a.n(), g), {}};
  sv.positions.reserve(sv.walls.size());
  for (const auto& w : sv.walls) sv.positions.push_back(position(a, w.subset));
  return sv;
}

inline bool same_chamber(const WeightData& a, const WeightData& b, Granularity g) {
  if (a.n() != b.n() || a.genus != b.genus)
    throw Error(ErrorKind::InvalidArgument,
                "weight data have different (g, n): (" + std::to_string(a.genus) +
                    ", " + std::to_string(a.n()) + ") vs (" +
                    std::to_string(b.genus) + ", " + std::to_string(b.n()) + ")");
  SignVector sa = locate(a, g), sb = locate(b, g);
  if (sa.has_on() || sb.has_on())
    throw Error(ErrorKind::OnWall, "weight data lies on a wall");
  return sa.positions == sb.positions;
}

/// Constraint system cutting out the open chamber with the given positions.
inline ConstraintSystem chamber_system(int genus, std::size_t n,
                                       const std::vector<Wall>& ws,
                                       const std::vector<Position>& positions) {
  ConstraintSystem sys = domain_system(genus, n);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    auto v = indicator(ws[i].subset, n);
    switch (positions[i]) {
      case Position::Above: sys.add_greater(v, Rational(1)); break;
      case Position::Below: sys.add(v, Relation::Less, Rational(1)); break;
      case Position::On: sys.add(v, Relation::Equal, Rational(1)); break;
    }
  }
  return sys;
}

namespace detail {

struct ChamberSearch {
  int genus;
  std::size_t n;
  const std::vector<Wall>& ws;
  std::vector<Chamber>& out;
  std::vector<Position> chosen;

  // `system` is the current region; `point` strictly inside it.
  void descend(const ConstraintSystem& system, const std::vector<Rational>& point) {
    std::size_t depth = chosen.size();
    if (depth == ws.size()) {
      out.push_back({chosen, WeightData{genus, point}});
      return;
    }
    auto v = indicator(ws[depth].subset, n);
    Position here = position(WeightData{genus, point}, ws[depth].subset);
    for (Position side : {Position::Below, Position::Above}) {
      ConstraintSystem next = system;
      if (side == Position::Above) next.add_greater(v, Rational(1));
      else next.add(v, Relation::Less, Rational(1));
      chosen.push_back(side);
      if (here == side) {
        descend(next, point);
      } else if (auto p = find_interior_point(next)) {
        descend(next, *p);
      }
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// Every nonempty open chamber: depth-first over the walls in canonical order,
/// pruning infeasible prefixes. A branch already containing the current
/// witness needs no feasibility call.
inline ChamberSet enumerate_chambers(int genus, std::size_t n, Granularity g,
                                     std::size_t limit = kDefaultEnumerationLimit) {
  detail::check_domain_params(genus, n);
  if (n > limit)
    throw Error(ErrorKind::LimitExceeded,
                "n = " + std::to_string(n) + " exceeds enumeration limit " +
                    std::to_string(limit));
  ChamberSet result{genus, n, g, walls(genus, n, g), {}};
  ConstraintSystem domain = domain_system(genus, n);
  auto start = find_interior_point(domain);
  if (!start) return result;
  detail::ChamberSearch search{genus, n, result.walls, result.chambers, {}};
  search.descend(domain, *start);
  return result;
}

namespace detail {

inline Rational min_wall_distance(const WeightData& a, bool& on_wall) {
  std::optional<Rational> best;
  on_wall = false;
  auto [lo, hi] = wall_size_range(a.n(), Granularity::Fine);
  for (Subset s = 1; s <= full_subset(a.n()) && s != 0; ++s) {
    int size = subset_size(s);
    if (size < lo || size > hi) continue;
    Rational d = abs(a.sum(s) - Rational(1));
    if (d.is_zero()) on_wall = true;
    else if (!best || d < *best) best = d;
  }
  return best.value_or(Rational(1));
}

}  // namespace detail

/// Shifts every weight down by eps/n, where eps is half the smallest slack
/// among: |sum_S a - 1| for fine-wall subsets S off their wall, the domain
/// margin sum a - (2 - 2g), and the smallest weight. Subsets on a wall land
/// strictly below it; all others keep their side.
inline WeightData perturb_to_fine_chamber(const WeightData& a) {
  bool on_wall = false;
  Rational slack = detail::min_wall_distance(a, on_wall);
  slack = std::min(slack, a.total() - Rational(2 - 2 * a.genus));
  for (const auto& w : a.weights) slack = std::min(slack, w);
  if (slack <= Rational(0))
    throw Error(ErrorKind::DomainViolation, "weight data outside the open domain");
  const Rational eps = slack / Rational(2);
  const Rational shift = eps / Rational(static_cast<std::int64_t>(a.n()));
  WeightData b = a;
  for (auto& w : b.weights) w -= shift;
  return b;
}

/// The perturbation parameter chosen by perturb_to_fine_chamber.
inline Rational perturbation_epsilon(const WeightData& a) {
  WeightData b = perturb_to_fine_chamber(a);
  return (a[0] - b[0]) * Rational(static_cast<std::int64_t>(a.n()));
}

/// Appends a weight eps equal to half of min_S |sum_S a - 1| over fine-wall
/// subsets (1/2 when there are none).
inline WeightData universal_curve_weight(const WeightData& a) {
  bool on_wall = false;
  Rational m = detail::min_wall_distance(a, on_wall);
  if (on_wall) throw Error(ErrorKind::OnWall, "weight data lies on a fine wall");
  WeightData b = a;
  b.weights.push_back(std::min(m, Rational(1)) / Rational(2));
  return b;
}

}  // namespace weightscape
