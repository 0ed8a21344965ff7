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

#include <cstdint>
#include <string>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/git.hpp"
#include "weightscape/named.hpp"
#include "weightscape/rational.hpp"

namespace weightscape {

/// C(m, 2), zero when m < 2.
inline Rational choose2(std::int64_t m) {
  return m < 2 ? Rational(0) : Rational(m * (m - 1) / 2);
}

struct LedgerStep {
  int step = 0;
  Rational canonical;                   // coefficient of E_r in K
  std::vector<Rational> multiplicities;  // of E_r in each boundary pullback
  Rational discrepancy;
};

/// Discrepancies of the exceptional divisors of a blow-up tower with respect
/// to a boundary divisor sum_i coefficients[i] * Delta_i.
struct DiscrepancyLedger {
  int n = 0;
  std::vector<Rational> coefficients;  // (alpha) or (alpha, beta)
  std::vector<LedgerStep> steps;

  bool log_canonical() const {
    for (const auto& s : steps)
      if (s.discrepancy < Rational(-1)) return false;
    return true;
  }

  void add(int step, Rational canonical, std::vector<Rational> mult) {
    Rational d = canonical;
    for (std::size_t i = 0; i < mult.size(); ++i) d -= coefficients[i] * mult[i];
    steps.push_back({step, canonical, std::move(mult), d});
  }
};

/// X_k[n] over X_0[n] = P^{n-3} with boundary alpha * (hyperplane arrangement).
inline DiscrepancyLedger kapranov_ledger(int n, int k, const Rational& alpha) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "need n >= 5");
  if (k < 1 || k > n - 4) throw Error(ErrorKind::InvalidArgument, "need 1 <= k <= n-4");
  if (alpha.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  DiscrepancyLedger ledger{n, {alpha}, {}};
  for (int r = 1; r <= k; ++r) ledger.add(r, Rational(n - 3 - r), {choose2(n - 1 - r)});
  return ledger;
}

struct RationalInterval {
  Rational lower;  // open
  Rational upper;  // closed
  bool nonempty() const { return lower < upper; }
  bool contains(const Rational& x) const { return lower < x && x <= upper; }
  std::string str() const { return "(" + lower.str() + ", " + upper.str() + "]"; }
};

/// Boundary coefficients alpha for which K + alpha * Delta is ample on X_0[n]
/// and the pair stays log canonical up the tower.
inline RationalInterval kapranov_ample_lc_range(int n) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "need n >= 5");
  return {Rational(2, n - 1), Rational(2, n - 2)};
}

struct KeelVerdict {
  DiscrepancyLedger ledger;
  bool ample = false;
  bool log_canonical = false;
  bool beta_bound = false;    // beta <= 2/(n-3)
  bool mixed_bound = false;   // alpha + beta (n-4)/2 <= 1
};

/// Y_{2n-9}[n] over (P^1)^{n-3}. Steps 1..n-4 blow up the loci where diagonals
/// meet the coordinate sections, steps n-3..2n-9 the remaining diagonals.
inline KeelVerdict keel_ledger(int n, const Rational& alpha, const Rational& beta) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "need n >= 5");
  if (alpha.sign() < 0 || beta.sign() < 0)
    throw Error(ErrorKind::InvalidArgument, "boundary coefficients must be nonnegative");
  KeelVerdict v;
  v.ledger = {n, {alpha, beta}, {}};
  for (int r = 1; r <= n - 4; ++r)
    v.ledger.add(r, Rational(n - 3 - r), {Rational(n - 2 - r), choose2(n - 2 - r)});
  for (int r = 1; r <= n - 5; ++r)
    v.ledger.add(n - 4 + r, Rational(n - 4 - r), {Rational(0), choose2(n - 2 - r)});
  v.log_canonical = v.ledger.log_canonical();
  v.ample = Rational(3) * alpha + Rational(n - 4) * beta > Rational(2);
  v.beta_bound = beta <= Rational(2, n - 3);
  v.mixed_bound = alpha + beta * Rational(n - 4, 2) <= Rational(1);
  return v;
}

struct SixPointReport {
  RationalInterval range;
  std::vector<Subset> semistable_types;
  std::size_t points_blown_up = 0;  // X_1[6] -> X_0[6]
  std::size_t lines_blown_up = 0;   // X_2[6] -> X_1[6]
  bool holds = false;
};

/// Six points with weights 1/3: the ample log canonical range on P^3, the
/// nodes of the symmetric quotient, and the centers of the first two blow-ups.
inline SixPointReport six_point_check() {
  SixPointReport r;
  r.range = kapranov_ample_lc_range(6);
  r.semistable_types =
      strictly_semistable_types(Linearization(std::vector<Rational>(6, Rational(1, 3))));
  for (const auto& step : blowup_sequence(Tower::KapranovX, 6)) {
    if (step.source == NamedFamily::X(6, 1)) r.points_blown_up = step.exceptional_count();
    if (step.source == NamedFamily::X(6, 2)) r.lines_blown_up = step.exceptional_count();
  }
  r.holds = r.range.lower == Rational(2, 5) && r.range.upper == Rational(1, 2) &&
            r.semistable_types.size() == 10 && r.points_blown_up == 5 && r.lines_blown_up == 10;
  return r;
}

}  // namespace weightscape
