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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/rational.hpp"

namespace weightscape {

enum class Relation { Less, LessEqual, Equal };

/// coefficients · x  (relation)  constant
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational constant;
  Relation relation = Relation::LessEqual;
};

struct ConstraintSystem {
  std::size_t dimension = 0;
  std::vector<LinearConstraint> constraints;

  explicit ConstraintSystem(std::size_t dim = 0) : dimension(dim) {}

  void add(std::vector<Rational> coefficients, Relation relation,
           Rational constant) {
    constraints.push_back({std::move(coefficients), constant, relation});
  }
  /// coefficients · x > constant, stored as the negated strict upper bound.
  void add_greater(std::vector<Rational> coefficients, Rational constant) {
    for (auto& c : coefficients) c = -c;
    constraints.push_back({std::move(coefficients), -constant, Relation::Less});
  }
  void add_greater_equal(std::vector<Rational> coefficients, Rational constant) {
    for (auto& c : coefficients) c = -c;
    constraints.push_back(
        {std::move(coefficients), -constant, Relation::LessEqual});
  }
};

namespace detail {

struct Row {
  std::vector<Rational> coef;
  Rational bound;  // coef · x  <  bound  (or <=)
  bool strict = false;
};

// One Fourier-Motzkin run. Keeps every intermediate stage so that a witness
// can be rebuilt by back-substitution.
class Eliminator {
 public:
  explicit Eliminator(const ConstraintSystem& system) : dim_(system.dimension) {
    if (dim_ == 0)
      throw Error(ErrorKind::InvalidArgument, "system dimension must be >= 1");
    std::vector<Row> rows;
    std::vector<Row> equalities;
    for (std::size_t i = 0; i < system.constraints.size(); ++i) {
      const auto& c = system.constraints[i];
      if (c.coefficients.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch,
                    "constraint " + std::to_string(i) + " has " +
                        std::to_string(c.coefficients.size()) +
                        " coefficients, system dimension is " +
                        std::to_string(dim_));
      Row row{c.coefficients, c.constant, c.relation == Relation::Less};
      (c.relation == Relation::Equal ? equalities : rows).push_back(std::move(row));
    }
    feasible_ = substitute_equalities(equalities, rows) && run(std::move(rows));
  }

  bool feasible() const noexcept { return feasible_; }

  std::vector<Rational> witness() const {
    std::vector<Rational> x(dim_);
    for (std::size_t s = stages_.size(); s-- > 0;) {
      std::size_t var = order_[s];
      std::optional<Rational> lo, hi;
      bool lo_strict = false, hi_strict = false;
      for (const auto& row : stages_[s]) {
        const Rational& a = row.coef[var];
        if (a.is_zero()) continue;
        Rational rest = row.bound;
        for (std::size_t j = 0; j < dim_; ++j)
          if (j != var && !row.coef[j].is_zero()) rest -= row.coef[j] * x[j];
        Rational limit = rest / a;
        if (a.sign() > 0) {
          if (!hi || limit < *hi || (limit == *hi && row.strict)) {
            hi_strict = (hi && limit == *hi) ? (hi_strict || row.strict) : row.strict;
            hi = limit;
          }
        } else {
          if (!lo || limit > *lo || (limit == *lo && row.strict)) {
            lo_strict = (lo && limit == *lo) ? (lo_strict || row.strict) : row.strict;
            lo = limit;
          }
        }
      }
      if (lo && hi) {
        x[var] = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
      } else if (lo) {
        x[var] = *lo + Rational(1);
      } else if (hi) {
        x[var] = *hi - Rational(1);
      } else {
        x[var] = Rational(0);
      }
    }
    for (std::size_t k = substitutions_.size(); k-- > 0;) {
      const auto& [pivot, row] = substitutions_[k];
      Rational value = row.bound;
      for (std::size_t j = 0; j < dim_; ++j)
        if (j != pivot && !row.coef[j].is_zero()) value -= row.coef[j] * x[j];
      x[pivot] = value / row.coef[pivot];
    }
    return x;
  }

 private:
  static bool constant_row_ok(const Row& row) {
    return row.strict ? Rational(0) < row.bound : Rational(0) <= row.bound;
  }

  static bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  }

  // Replace x_pivot everywhere using  eq.coef · x = eq.bound.
  static void substitute(Row& target, std::size_t pivot, const Row& eq) {
    const Rational factor = target.coef[pivot] / eq.coef[pivot];
    if (factor.is_zero()) return;
    for (std::size_t j = 0; j < target.coef.size(); ++j)
      if (!eq.coef[j].is_zero()) target.coef[j] -= factor * eq.coef[j];
    target.bound -= factor * eq.bound;
  }

  bool substitute_equalities(std::vector<Row>& equalities, std::vector<Row>& rows) {
    for (std::size_t e = 0; e < equalities.size(); ++e) {
      Row& eq = equalities[e];
      std::size_t pivot = dim_;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!eq.coef[j].is_zero()) {
          pivot = j;
          break;
        }
      if (pivot == dim_) {
        if (!eq.bound.is_zero()) return false;
        continue;
      }
      for (std::size_t f = e + 1; f < equalities.size(); ++f)
        substitute(equalities[f], pivot, eq);
      for (auto& row : rows) substitute(row, pivot, eq);
      substitutions_.emplace_back(pivot, eq);
    }
    return true;
  }

  // Scale so the first nonzero coefficient is +-1; drop rows dominated by a
  // parallel row with a tighter bound. Returns false on a violated constant row.
  static bool prune(std::vector<Row>& rows) {
    std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
    for (auto& row : rows) {
      if (all_zero(row.coef)) {
        if (!constant_row_ok(row)) return false;
        continue;
      }
      Rational lead;
      for (const auto& c : row.coef)
        if (!c.is_zero()) {
          lead = abs(c);
          break;
        }
      if (lead != Rational(1)) {
        for (auto& c : row.coef) c /= lead;
        row.bound /= lead;
      }
      auto [it, inserted] = best.try_emplace(row.coef, row.bound, row.strict);
      if (!inserted) {
        auto& [bound, strict] = it->second;
        if (row.bound < bound || (row.bound == bound && row.strict)) {
          bound = row.bound;
          strict = row.strict;
        }
      }
    }
    rows.clear();
    rows.reserve(best.size());
    for (auto& [coef, bs] : best) rows.push_back({coef, bs.first, bs.second});
    return true;
  }

  bool run(std::vector<Row> rows) {
    if (!prune(rows)) return false;
    std::vector<bool> pivots(dim_, false);
    for (const auto& s : substitutions_) pivots[s.first] = true;
    for (std::size_t var = 0; var < dim_; ++var) {
      if (pivots[var]) continue;
      stages_.push_back(rows);
      order_.push_back(var);
      std::vector<Row> upper, lower, next;
      for (auto& row : rows) {
        int s = row.coef[var].sign();
        if (s > 0) upper.push_back(std::move(row));
        else if (s < 0) lower.push_back(std::move(row));
        else next.push_back(std::move(row));
      }
      for (const auto& lo : lower) {
        const Rational lo_scale = -lo.coef[var];
        for (const auto& up : upper) {
          const Rational up_scale = up.coef[var];
          Row combined;
          combined.coef.resize(dim_);
          for (std::size_t j = 0; j < dim_; ++j) {
            if (j == var) continue;
            if (lo.coef[j].is_zero() && up.coef[j].is_zero()) continue;
            combined.coef[j] = lo.coef[j] / lo_scale + up.coef[j] / up_scale;
          }
          combined.bound = lo.bound / lo_scale + up.bound / up_scale;
          combined.strict = lo.strict || up.strict;
          next.push_back(std::move(combined));
        }
      }
      rows = std::move(next);
      if (!prune(rows)) return false;
    }
    return true;
  }

  std::size_t dim_;
  bool feasible_ = false;
  std::vector<std::pair<std::size_t, Row>> substitutions_;
  std::vector<std::vector<Row>> stages_;
  std::vector<std::size_t> order_;
};

}  // namespace detail

/// True iff some rational point satisfies every constraint, strict ones
/// included. Decided exactly by Fourier-Motzkin elimination in index order.
inline bool is_feasible(const ConstraintSystem& system) {
  return detail::Eliminator(system).feasible();
}

/// A satisfying point, or nullopt. Deterministic: back-substitution takes the
/// midpoint of each variable's feasible interval (lo+1 / hi-1 / 0 when a side
/// is unbounded).
inline std::optional<std::vector<Rational>> find_interior_point(
    const ConstraintSystem& system) {
  detail::Eliminator elim(system);
  if (!elim.feasible()) return std::nullopt;
  return elim.witness();
}

/// Exact membership test, used to double-check witnesses.
inline bool satisfies(const ConstraintSystem& system,
                      const std::vector<Rational>& point) {
  for (const auto& c : system.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < point.size(); ++j)
      if (!c.coefficients[j].is_zero()) lhs += c.coefficients[j] * point[j];
    switch (c.relation) {
      case Relation::Less:
        if (!(lhs < c.constant)) return false;
        break;
      case Relation::LessEqual:
        if (!(lhs <= c.constant)) return false;
        break;
      case Relation::Equal:
        if (lhs != c.constant) return false;
        break;
    }
  }
  return true;
}

}  // namespace weightscape
