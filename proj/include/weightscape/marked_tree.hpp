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
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "weightscape/error.hpp"
#include "weightscape/rational.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape {

/// Markings that occupy the same point of a component.
///
/// A node-supported class sits on a node instead of a smooth point; that is
/// only legal when every member has weight zero. `node_peer` names the vertex
/// on the other side of that node (it is not part of the JSON form).
struct MarkingClass {
  std::vector<int> members;  // sorted, 1-based labels
  bool node_supported = false;
  int node_peer = -1;

  friend bool operator==(const MarkingClass& a, const MarkingClass& b) {
    return a.members == b.members && a.node_supported == b.node_supported;
  }
};

struct Vertex {
  int id = 0;
  int genus = 0;
  std::vector<MarkingClass> classes;
};

/// Dual graph of a pointed nodal curve. Despite the name, cycles and self-loops
/// are allowed for positive genus.
struct MarkedTree {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;

  const Vertex& vertex(int id) const {
    for (const auto& v : vertices)
      if (v.id == id) return v;
    throw Error(ErrorKind::InvalidArgument, "no vertex with id " + std::to_string(id));
  }
  Vertex& vertex(int id) {
    return const_cast<Vertex&>(static_cast<const MarkedTree&>(*this).vertex(id));
  }
  bool has_vertex(int id) const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [id](const Vertex& v) { return v.id == id; });
  }

  /// Self-loops count twice.
  int valence(int id) const {
    int val = 0;
    for (auto [a, b] : edges) val += (a == id) + (b == id);
    return val;
  }

  /// Neighbor ids, one entry per incident edge end (self-loops listed twice).
  std::vector<int> neighbors(int id) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
      if (a == id) out.push_back(b);
      if (b == id) out.push_back(a);
    }
    return out;
  }

  Subset markings() const {
    Subset s = 0;
    for (const auto& v : vertices)
      for (const auto& c : v.classes)
        for (int m : c.members) s |= Subset{1} << (m - 1);
    return s;
  }

  int betti_number() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
  }

  int arithmetic_genus() const {
    int g = betti_number();
    for (const auto& v : vertices) g += v.genus;
    return g;
  }

  /// Number of edges plus, per class, its size minus one.
  int codimension() const {
    int c = static_cast<int>(edges.size());
    for (const auto& v : vertices)
      for (const auto& cls : v.classes) c += static_cast<int>(cls.members.size()) - 1;
    return c;
  }
};

/// Structural checks: unique ids, edges between known vertices, connected,
/// every label used at most once (exactly once for labels 1..n when n > 0),
/// node-supported classes pointing at an adjacent vertex.
inline void check_tree(const MarkedTree& t, std::size_t n = 0) {
  if (t.vertices.empty()) throw Error(ErrorKind::InvalidArgument, "tree has no vertices");
  std::set<int> ids;
  for (const auto& v : t.vertices) {
    if (!ids.insert(v.id).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate vertex id " + std::to_string(v.id));
    if (v.genus < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex genus");
  }
  for (auto [a, b] : t.edges)
    if (!ids.count(a) || !ids.count(b))
      throw Error(ErrorKind::InvalidArgument, "edge references unknown vertex");
  std::set<int> reached{t.vertices.front().id};
  std::vector<int> stack{t.vertices.front().id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v))
      if (reached.insert(w).second) stack.push_back(w);
  }
  if (reached.size() != ids.size())
    throw Error(ErrorKind::InvalidArgument, "dual graph is not connected");
  Subset seen = 0;
  for (const auto& v : t.vertices)
    for (const auto& c : v.classes) {
      if (c.members.empty()) throw Error(ErrorKind::InvalidArgument, "empty marking class");
      for (int m : c.members) {
        if (m < 1 || m > static_cast<int>(kMaxMarkings))
          throw Error(ErrorKind::InvalidArgument, "marking label out of range");
        Subset bit = Subset{1} << (m - 1);
        if (seen & bit)
          throw Error(ErrorKind::InvalidArgument,
                      "marking " + std::to_string(m) + " appears twice");
        seen |= bit;
      }
      if (c.node_supported) {
        auto nb = t.neighbors(v.id);
        if (std::find(nb.begin(), nb.end(), c.node_peer) == nb.end())
          throw Error(ErrorKind::InvalidArgument,
                      "node-supported class is not on an incident node");
      }
    }
  if (n > 0 && seen != full_subset(n))
    throw Error(ErrorKind::InvalidArgument,
                "markings do not cover 1.." + std::to_string(n) + " exactly once");
}

inline Rational class_weight(const MarkingClass& c, const WeightData& a) {
  Rational s;
  for (int m : c.members) s += a[static_cast<std::size_t>(m - 1)];
  return s;
}

/// 2g_v - 2 + valence + sum of the weights of markings at v.
inline Rational vertex_log_degree(const MarkedTree& t, int vertex_id, const WeightData& a) {
  const Vertex& v = t.vertex(vertex_id);
  Rational deg(2 * v.genus - 2 + t.valence(vertex_id));
  for (const auto& c : v.classes) deg += class_weight(c, a);
  return deg;
}

struct StabilityViolation {
  enum class Kind { ClassOverweight, NodeSupportedPositive, VertexDegree };
  Kind kind;
  int vertex_id;
  std::vector<int> members;  // empty for VertexDegree
  Rational value;            // class weight or vertex degree
};

struct StabilityReport {
  bool stable = true;
  std::vector<StabilityViolation> violations;
  explicit operator bool() const noexcept { return stable; }
};

namespace detail {

inline void check_labels_fit(const MarkedTree& t, const WeightData& a) {
  if ((t.markings() & ~full_subset(a.n())) != 0)
    throw Error(ErrorKind::DimensionMismatch,
                "tree carries labels beyond n = " + std::to_string(a.n()));
}

}  // namespace detail

/// Stability of a dual graph under weight data. Labels missing from the tree
/// are treated as forgotten markings.
inline StabilityReport is_stable(const MarkedTree& t, const WeightData& a,
                                 WeightMode mode = WeightMode::Strict) {
  validate(a.genus, a.weights, mode);
  detail::check_labels_fit(t, a);
  StabilityReport report;
  const Rational one(1), zero;
  for (const auto& v : t.vertices) {
    for (const auto& c : v.classes) {
      Rational w = class_weight(c, a);
      if (w > one)
        report.violations.push_back(
            {StabilityViolation::Kind::ClassOverweight, v.id, c.members, w});
      if (c.node_supported && w > zero)
        report.violations.push_back(
            {StabilityViolation::Kind::NodeSupportedPositive, v.id, c.members, w});
    }
    Rational deg = vertex_log_degree(t, v.id, a);
    if (deg <= zero)
      report.violations.push_back({StabilityViolation::Kind::VertexDegree, v.id, {}, deg});
  }
  report.stable = report.violations.empty();
  return report;
}

namespace detail {

inline std::string class_key(const MarkingClass& c) {
  std::string s = c.node_supported ? "n[" : "[";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.members[i]);
  }
  return s + "]";
}

inline std::string vertex_classes_key(const Vertex& v, bool node_supported) {
  std::vector<std::string> keys;
  for (const auto& c : v.classes)
    if (c.node_supported == node_supported) keys.push_back(class_key(c));
  std::sort(keys.begin(), keys.end());
  std::string s;
  for (auto& k : keys) s += k;
  return s;
}

inline std::string encode_rooted(const MarkedTree& t, int v, int parent) {
  const Vertex& vx = t.vertex(v);
  // node-supported classes on the edge to the parent belong to this encoding
  std::vector<std::string> on_parent_edge;
  for (const auto& c : vx.classes)
    if (c.node_supported && c.node_peer == parent) on_parent_edge.push_back(class_key(c));
  if (parent >= 0)
    for (const auto& c : t.vertex(parent).classes)
      if (c.node_supported && c.node_peer == v) on_parent_edge.push_back(class_key(c));
  std::sort(on_parent_edge.begin(), on_parent_edge.end());
  std::vector<std::string> children;
  for (int w : t.neighbors(v))
    if (w != parent) children.push_back(encode_rooted(t, w, v));
  std::sort(children.begin(), children.end());
  std::string s = "(g" + std::to_string(vx.genus) + ":" + vertex_classes_key(vx, false) + "|";
  for (auto& e : on_parent_edge) s += e;
  s += "|";
  for (auto& c : children) s += c;
  return s + ")";
}

}  // namespace detail

/// A string equal for two dual graphs exactly when they agree up to renaming
/// vertex ids. Exact for trees (rooted at the vertex carrying the smallest
/// smooth marking); for graphs with cycles it compares sorted vertex data and
/// edge multisets, which can separate isomorphic graphs with unmarked cycles.
inline std::string canonical_form(const MarkedTree& t) {
  if (t.betti_number() == 0) {
    int root = t.vertices.front().id;
    int best_label = 1 << 30;
    for (const auto& v : t.vertices)
      for (const auto& c : v.classes)
        if (!c.node_supported && !c.members.empty() && c.members.front() < best_label) {
          best_label = c.members.front();
          root = v.id;
        }
    if (best_label == 1 << 30) {
      root = std::min_element(t.vertices.begin(), t.vertices.end(),
                              [](const Vertex& a, const Vertex& b) { return a.id < b.id; })
                 ->id;
    }
    return detail::encode_rooted(t, root, -1);
  }
  std::map<int, std::string> sig;
  for (const auto& v : t.vertices)
    sig[v.id] = "(g" + std::to_string(v.genus) + ":" + detail::vertex_classes_key(v, false) +
                "|" + detail::vertex_classes_key(v, true) + ")";
  std::vector<std::string> vs, es;
  for (auto& [id, s] : sig) vs.push_back(s);
  for (auto [a, b] : t.edges) {
    auto x = sig[a], y = sig[b];
    if (y < x) std::swap(x, y);
    es.push_back(x + "-" + y);
  }
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  std::string out = "G{";
  for (auto& s : vs) out += s;
  out += "}{";
  for (auto& s : es) out += s + ";";
  return out + "}";
}

inline bool same_tree(const MarkedTree& a, const MarkedTree& b) {
  return canonical_form(a) == canonical_form(b);
}

/// Sorts members, classes, vertices and edges without renaming anything.
inline MarkedTree normalized(MarkedTree t) {
  for (auto& v : t.vertices) {
    for (auto& c : v.classes) {
      std::sort(c.members.begin(), c.members.end());
      if (!c.node_supported) c.node_peer = -1;
    }
    std::sort(v.classes.begin(), v.classes.end(),
              [](const MarkingClass& x, const MarkingClass& y) {
                return std::tie(x.node_supported, x.members) <
                       std::tie(y.node_supported, y.members);
              });
  }
  std::sort(t.vertices.begin(), t.vertices.end(),
            [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
  for (auto& e : t.edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

/// Convenience: a single genus-g vertex with every marking in its own class.
inline MarkedTree smooth_curve(std::size_t n, int genus = 0) {
  MarkedTree t;
  Vertex v{0, genus, {}};
  for (std::size_t m = 1; m <= n; ++m) v.classes.push_back({{static_cast<int>(m)}});
  t.vertices.push_back(std::move(v));
  return t;
}

}  // namespace weightscape
