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
#include "weightscape/marked_tree.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape {

/// Picks which of several contractible vertices goes next; receives their ids
/// in increasing order and returns a position in that list.
using ContractionChooser = std::function<std::size_t(const std::vector<int>&)>;

namespace detail {

inline bool has_positive_marking(const Vertex& v, const WeightData& b) {
  for (const auto& c : v.classes)
    if (class_weight(c, b) > Rational(0)) return true;
  return false;
}

inline void erase_edge(MarkedTree& t, int x, int y) {
  for (auto it = t.edges.begin(); it != t.edges.end(); ++it)
    if ((it->first == x && it->second == y) || (it->first == y && it->second == x)) {
      t.edges.erase(it);
      return;
    }
  throw Error(ErrorKind::Internal, "missing edge during contraction");
}

inline void erase_vertex(MarkedTree& t, int id) {
  t.vertices.erase(std::find_if(t.vertices.begin(), t.vertices.end(),
                                [id](const Vertex& v) { return v.id == id; }));
}

inline std::vector<int> collect_members(const Vertex& v) {
  std::vector<int> out;
  for (const auto& c : v.classes) out.insert(out.end(), c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Type I: a tail component. Its markings, together with anything sitting on
// its node, become one class at a smooth point of the neighbor.
inline void contract_tail(MarkedTree& t, int v) {
  int u = t.neighbors(v).front();
  std::vector<int> merged = collect_members(t.vertex(v));
  Vertex& nu = t.vertex(u);
  std::vector<MarkingClass> kept;
  for (auto& c : nu.classes) {
    if (c.node_supported && c.node_peer == v)
      merged.insert(merged.end(), c.members.begin(), c.members.end());
    else
      kept.push_back(std::move(c));
  }
  nu.classes = std::move(kept);
  std::sort(merged.begin(), merged.end());
  if (!merged.empty()) nu.classes.push_back({merged, false, -1});
  erase_edge(t, u, v);
  erase_vertex(t, v);
}

// Type II: a bridge component carrying only weight-zero markings. The edge to
// the lower-id neighbor is contracted; the markings land on the surviving node.
inline void contract_bridge(MarkedTree& t, int v) {
  std::vector<int> nb = t.neighbors(v);
  std::vector<int> others;
  for (int w : nb)
    if (w != v) others.push_back(w);
  if (others.empty())
    throw Error(ErrorKind::NonterminatingContraction,
                "self-loop component cannot be contracted");
  int u = *std::min_element(others.begin(), others.end());
  std::vector<int> merged = collect_members(t.vertex(v));
  erase_edge(t, u, v);
  int far = -1;
  for (auto& [a, b] : t.edges) {
    if (a == v) a = u, far = b;
    if (b == v) b = u, far = a;
  }
  for (auto& x : t.vertices)
    for (auto& c : x.classes)
      if (c.node_supported && c.node_peer == v) c.node_peer = u;
  erase_vertex(t, v);
  if (!merged.empty()) t.vertex(u).classes.push_back({merged, true, far});
}

inline MarkedTree contract_until_stable(MarkedTree t, const WeightData& b,
                                        const ContractionChooser& choose) {
  const std::size_t budget = t.vertices.size() + 1;
  for (std::size_t round = 0;; ++round) {
    std::vector<int> candidates;
    for (const auto& v : t.vertices)
      if (vertex_log_degree(t, v.id, b) <= Rational(0)) candidates.push_back(v.id);
    if (candidates.empty()) return t;
    if (round >= budget)
      throw Error(ErrorKind::NonterminatingContraction, "contraction did not terminate");
    std::sort(candidates.begin(), candidates.end());
    std::size_t pick = choose ? choose(candidates) : 0;
    if (pick >= candidates.size())
      throw Error(ErrorKind::InvalidArgument, "chooser returned an invalid position");
    int v = candidates[pick];
    const Vertex& vx = t.vertex(v);
    int val = t.valence(v);
    if (vx.genus == 0 && val == 1) {
      contract_tail(t, v);
    } else if (vx.genus == 0 && val == 2 && !has_positive_marking(vx, b)) {
      contract_bridge(t, v);
    } else {
      throw Error(ErrorKind::NonterminatingContraction,
                  "vertex " + std::to_string(v) + " has non-positive degree but is "
                  "neither a tail nor a bridge");
    }
  }
}

}  // namespace detail

/// The reduction of an A-stable dual graph to weights B <= A: components on
/// which the B-log-degree is not positive are collapsed until none remain.
/// Without a chooser the lowest vertex id is contracted first. Weight-zero
/// entries of B stay on the curve as markings.
inline MarkedTree stabilize(const MarkedTree& tree, const WeightData& a,
                            const WeightData& b, const ContractionChooser& choose = {}) {
  check_tree(tree, a.n());
  validate(b.genus, b.weights, WeightMode::ZeroAllowed);
  require_dominated(b, a);
  if (auto report = is_stable(tree, a, WeightMode::ZeroAllowed); !report)
    throw Error(ErrorKind::NotAStable, "input tree is not stable for the source weights");
  return detail::contract_until_stable(tree, b, choose);
}

/// Deletes markings outside `keep`, then contracts with the kept weights.
inline MarkedTree forget(const MarkedTree& tree, const WeightData& a, Subset keep,
                         const ContractionChooser& choose = {}) {
  check_tree(tree, a.n());
  if ((keep & ~full_subset(a.n())) != 0)
    throw Error(ErrorKind::InvalidArgument, "kept markings outside 1..n");
  if (auto report = is_stable(tree, a, WeightMode::ZeroAllowed); !report)
    throw Error(ErrorKind::NotAStable, "input tree is not stable for the source weights");
  if (Rational(2 * a.genus - 2) + a.sum(keep) <= Rational(0))
    throw Error(ErrorKind::ResidualDegreeNotPositive,
                "2g-2 plus the kept weights is not positive");
  MarkedTree t = tree;
  for (auto& v : t.vertices) {
    std::vector<MarkingClass> classes;
    for (auto& c : v.classes) {
      std::vector<int> members;
      for (int m : c.members)
        if (keep >> (m - 1) & 1) members.push_back(m);
      if (!members.empty()) classes.push_back({members, c.node_supported, c.node_peer});
    }
    v.classes = std::move(classes);
  }
  WeightData kept = a;
  for (std::size_t j = 0; j < kept.n(); ++j)
    if (!(keep >> j & 1)) kept.weights[j] = Rational(0);
  return detail::contract_until_stable(std::move(t), kept, choose);
}

}  // namespace weightscape
