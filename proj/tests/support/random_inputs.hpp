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

// Random inputs for the property tests. Seeds are fixed by the callers.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "weightscape/weightscape.hpp"

namespace testing_support {

namespace ws = weightscape;

inline ws::Rational random_fraction(std::mt19937_64& rng, bool allow_zero = false) {
  static const int dens[] = {1, 2, 3, 4, 5, 6, 8, 12};
  int q = dens[std::uniform_int_distribution<int>(0, 7)(rng)];
  int p = std::uniform_int_distribution<int>(allow_zero ? 0 : 1, q)(rng);
  return ws::Rational(p, q);
}

/// Genus-0 weight data in the open domain.
inline ws::WeightData random_weights(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    std::vector<ws::Rational> w;
    for (std::size_t j = 0; j < n; ++j) w.push_back(random_fraction(rng));
    ws::WeightData a{0, w};
    if (a.total() > ws::Rational(2)) return a;
  }
}

/// Weight data dominated by `a`, entries possibly zero, still of positive
/// log degree.
inline ws::WeightData random_below(std::mt19937_64& rng, const ws::WeightData& a) {
  while (true) {
    ws::WeightData b = a;
    for (auto& w : b.weights) {
      int roll = std::uniform_int_distribution<int>(0, 9)(rng);
      if (roll < 4) continue;  // keep
      if (roll == 9) w = ws::Rational(0);
      else w = w * random_fraction(rng);
    }
    if (b.total() > ws::Rational(2)) return b;
  }
}

/// An A-stable genus-0 tree: random labeled tree, random placement of the
/// markings, random coincidences; retried until stable.
inline ws::MarkedTree random_stable_tree(std::mt19937_64& rng, const ws::WeightData& a,
                                         ws::WeightMode mode = ws::WeightMode::Strict) {
  const int n = static_cast<int>(a.n());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    int k = std::uniform_int_distribution<int>(1, std::max(1, n - 2))(rng);
    std::vector<int> code(static_cast<std::size_t>(std::max(0, k - 2)));
    for (auto& c : code) c = std::uniform_int_distribution<int>(0, k - 1)(rng);
    ws::MarkedTree t;
    for (int v = 0; v < k; ++v) t.vertices.push_back({v, 0, {}});
    t.edges = oracle::prufer_edges(code, k);
    for (int m = 1; m <= n; ++m) {
      int v = std::uniform_int_distribution<int>(0, k - 1)(rng);
      auto& classes = t.vertices[static_cast<std::size_t>(v)].classes;
      bool join = !classes.empty() && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
      if (join) {
        auto& c = classes[std::uniform_int_distribution<std::size_t>(0, classes.size() - 1)(rng)];
        c.members.push_back(m);
      } else {
        classes.push_back({{m}});
      }
    }
    if (ws::is_stable(t, a, mode)) return ws::normalized(t);
  }
  return ws::smooth_curve(a.n());
}

/// A chooser picking a uniformly random candidate.
inline ws::ContractionChooser random_chooser(std::mt19937_64& rng) {
  return [&rng](const std::vector<int>& ids) {
    return std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng);
  };
}

}  // namespace testing_support
