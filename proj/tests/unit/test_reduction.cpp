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


#include <gtest/gtest.h>

#include <random>

#include "random_inputs.hpp"
#include "weightscape/reduction.hpp"

namespace ws = weightscape;
using ws::MarkedTree;
using ws::Rational;

namespace {

ws::WeightData w(std::vector<Rational> xs, ws::WeightMode mode = ws::WeightMode::Strict) {
  return ws::validate(0, std::move(xs), mode);
}

ws::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ws::Error& e) {
    return e.kind();
  }
  return ws::ErrorKind::Internal;
}

MarkedTree two_vertex() {
  MarkedTree t;
  t.vertices = {{0, 0, {{{1}}, {{2}}}}, {1, 0, {{{3}}, {{4}}}}};
  t.edges = {{0, 1}};
  return t;
}

MarkedTree one_vertex(std::vector<std::vector<int>> classes) {
  MarkedTree t;
  t.vertices = {{0, 0, {}}};
  for (auto& c : classes) t.vertices[0].classes.push_back({c});
  return t;
}

}  // namespace

TEST(Stabilize, CollapsesALightTail) {
  auto out = ws::stabilize(two_vertex(), w({1, 1, 1, 1}), w({1, 1, Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(ws::same_tree(out, one_vertex({{1}, {2}, {3, 4}})));
  EXPECT_TRUE(ws::is_stable(out, w({1, 1, Rational(1, 2), Rational(1, 2)})));
}

TEST(Stabilize, IdentityWhenNothingChanges) {
  auto a = w({1, 1, 1, 1});
  EXPECT_TRUE(ws::same_tree(ws::stabilize(two_vertex(), a, a), two_vertex()));
}

TEST(Stabilize, BridgeBecomesNodeSupportedZeroClass) {
  // v0 {1},{2} -- v1 {5} -- v2 {3},{4}; dropping 5 to zero leaves v1 a bridge.
  MarkedTree t;
  t.vertices = {{0, 0, {{{1}}, {{2}}}}, {1, 0, {{{5}}}}, {2, 0, {{{3}}, {{4}}}}};
  t.edges = {{0, 1}, {1, 2}};
  auto b = w({1, 1, 1, 1, 0}, ws::WeightMode::ZeroAllowed);
  auto out = ws::stabilize(t, w({1, 1, 1, 1, 1}), b);
  ASSERT_EQ(out.vertices.size(), 2u);
  ASSERT_EQ(out.edges.size(), 1u);
  EXPECT_TRUE(ws::is_stable(out, b, ws::WeightMode::ZeroAllowed));
  bool found = false;
  for (const auto& v : out.vertices)
    for (const auto& c : v.classes)
      if (c.members == std::vector<int>{5}) {
        EXPECT_TRUE(c.node_supported);
        found = true;
      }
  EXPECT_TRUE(found);
}

TEST(Stabilize, Errors) {
  EXPECT_EQ(kind_of([] {
              ws::stabilize(two_vertex(), w({1, 1, Rational(1, 2), Rational(1, 2)}),
                            w({1, 1, Rational(1, 4), Rational(1, 4)}));
            }),
            ws::ErrorKind::NotAStable);
  EXPECT_EQ(kind_of([] {
              ws::stabilize(two_vertex(), w({1, 1, Rational(3, 4), 1}), w({1, 1, 1, 1}));
            }),
            ws::ErrorKind::WeightsNotDominated);
}

TEST(Stabilize, KapranovReductionMatchesDivisorFates) {
  // Every codimension-one stratum of the source maps to a point whose type the
  // divisor classification predicts.
  auto a = w({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), 1});
  auto b = w({Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3), 1});
  for (const auto& c : ws::contracted_divisors(a, b)) {
    auto image = ws::stabilize(ws::divisor_tree(c.divisor, 5), a, b);
    if (c.fate == ws::DivisorFate::Preserved) {
      EXPECT_EQ(image.vertices.size(), ws::divisor_tree(c.divisor, 5).vertices.size());
    } else {
      ASSERT_EQ(image.vertices.size(), 1u);
      bool has_class = false;
      for (const auto& cls : image.vertices[0].classes)
        has_class |= ws::subset_from(cls.members) == c.light_side;
      EXPECT_TRUE(has_class) << c.divisor.str();
      EXPECT_EQ(ws::subset_size(c.light_side) > 2, c.fate == ws::DivisorFate::Contracted);
    }
  }
}

TEST(Stabilize, ConfluentUnderRandomOrders) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 4 + trial % 4;
    auto a = testing_support::random_weights(rng, n);
    auto b = testing_support::random_below(rng, a);
    auto t = testing_support::random_stable_tree(rng, a);
    auto base = ws::stabilize(t, a, b);
    for (int rep = 0; rep < 3; ++rep)
      EXPECT_TRUE(ws::same_tree(base, ws::stabilize(t, a, b, testing_support::random_chooser(rng))));
    EXPECT_TRUE(ws::is_stable(base, b, ws::WeightMode::ZeroAllowed));
  }
}

TEST(Forget, DroppingAMarking) {
  auto out = ws::forget(ws::smooth_curve(5), w({1, 1, 1, 1, 1}), ws::subset_from({1, 2, 3, 4}));
  EXPECT_TRUE(ws::same_tree(out, ws::smooth_curve(4)));
}

TEST(Forget, CollapsesTheDestabilizedSide) {
  MarkedTree t;
  t.vertices = {{0, 0, {{{1}}, {{2}}, {{3}}}}, {1, 0, {{{4}}, {{5}}}}};
  t.edges = {{0, 1}};
  auto out = ws::forget(t, w({1, 1, 1, 1, 1}), ws::subset_from({1, 2, 3, 4}));
  EXPECT_TRUE(ws::same_tree(out, ws::smooth_curve(4)));
}

TEST(Forget, ResidualDegreeMustBePositive) {
  EXPECT_EQ(kind_of([] {
              ws::forget(ws::smooth_curve(4), w({1, 1, 1, 1}), ws::subset_from({1, 2}));
            }),
            ws::ErrorKind::ResidualDegreeNotPositive);
}

TEST(Forget, AgreesWithZeroingTheWeights) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 5 + trial % 3;
    auto a = testing_support::random_weights(rng, n);
    auto t = testing_support::random_stable_tree(rng, a);
    ws::Subset keep = ws::full_subset(n) & ~(ws::Subset{1} << (trial % n));
    if (a.sum(keep) <= Rational(2)) continue;
    auto forgotten = ws::forget(t, a, keep);
    EXPECT_FALSE(forgotten.markings() >> (trial % n) & 1);
    ws::WeightData kept = a;
    kept.weights[static_cast<std::size_t>(trial % n)] = 0;
    EXPECT_TRUE(ws::is_stable(forgotten, kept, ws::WeightMode::ZeroAllowed));
  }
}
