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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "weightscape/chambers.hpp"
#include "weightscape/error.hpp"
#include "weightscape/git.hpp"
#include "weightscape/marked_tree.hpp"
#include "weightscape/rational.hpp"
#include "weightscape/weight_data.hpp"

namespace weightscape::io {

using Json = nlohmann::ordered_json;

/// Deterministic text form used for every JSON output and for the cache.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorKind::ParseError, "expected a rational as \"p/q\" or an integer");
}

inline Json subset_json(Subset s) { return subset_members(s); }

inline Subset subset_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of markings");
  std::vector<int> members;
  for (const auto& m : j) {
    if (!m.is_number_integer()) throw Error(ErrorKind::ParseError, "marking must be an integer");
    members.push_back(m.get<int>());
  }
  return subset_from(members);
}

// Wraps nlohmann's type errors so callers only ever see ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline const Json& array_at(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorKind::ParseError, std::string(key) + " must be an array");
  return v;
}

// ---- weight data -----------------------------------------------------------

inline Json to_json(const WeightData& a) {
  Json w = Json::array();
  for (const auto& x : a.weights) w.push_back(x.str());
  return Json{{"genus", a.genus}, {"weights", w}};
}

/// Parses without validating; callers pick the membership mode.
inline WeightData weights_from_json(const Json& j) {
  return guarded([&] {
    WeightData a;
    a.genus = j.value("genus", 0);
    for (const auto& x : array_at(j, "weights")) a.weights.push_back(rational_from_json(x));
    return a;
  });
}

// ---- trees -----------------------------------------------------------------

inline Json to_json(const MarkedTree& tree) {
  MarkedTree t = normalized(tree);
  Json vs = Json::array();
  for (const auto& v : t.vertices) {
    Json classes = Json::array(), flags = Json::array();
    for (const auto& c : v.classes) {
      classes.push_back(c.members);
      flags.push_back(c.node_supported);
    }
    vs.push_back(Json{{"id", v.id}, {"genus", v.genus}, {"classes", classes},
                      {"node_supported", flags}});
  }
  Json es = Json::array();
  for (auto [a, b] : t.edges) es.push_back(Json::array({a, b}));
  return Json{{"vertices", vs}, {"edges", es}};
}

/// A node-supported class is attached to the node toward the lowest-id
/// neighbor; the JSON form does not say which node it sits on.
inline MarkedTree tree_from_json(const Json& j) {
  MarkedTree t = guarded([&] {
    MarkedTree t;
    for (const auto& jv : array_at(j, "vertices")) {
      Vertex v{jv.at("id").get<int>(), jv.value("genus", 0), {}};
      const Json flags = jv.value("node_supported", Json::array());
      const auto& classes = jv.at("classes");
      if (!flags.empty() && flags.size() != classes.size())
        throw Error(ErrorKind::ParseError, "node_supported length differs from classes");
      for (std::size_t i = 0; i < classes.size(); ++i) {
        MarkingClass c;
        for (const auto& m : classes[i]) c.members.push_back(m.get<int>());
        std::sort(c.members.begin(), c.members.end());
        c.node_supported = !flags.empty() && flags[i].get<bool>();
        v.classes.push_back(std::move(c));
      }
      t.vertices.push_back(std::move(v));
    }
    for (const auto& e : j.value("edges", Json::array())) {
      if (e.size() != 2) throw Error(ErrorKind::ParseError, "edge must have two ends");
      t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return t;
  });
  for (auto& v : t.vertices)
    for (auto& c : v.classes)
      if (c.node_supported) {
        auto nb = t.neighbors(v.id);
        if (nb.empty())
          throw Error(ErrorKind::InvalidArgument, "node-supported class on a vertex without nodes");
        c.node_peer = *std::min_element(nb.begin(), nb.end());
      }
  check_tree(t);
  return t;
}

// ---- git -------------------------------------------------------------------

inline Json to_json(const Linearization& t) {
  Json w = Json::array();
  for (const auto& x : t.weights()) w.push_back(x.str());
  return Json{{"t", w}};
}

inline Linearization linearization_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Rational> t;
    for (const auto& x : array_at(j, "t")) t.push_back(rational_from_json(x));
    return Linearization(std::move(t));
  });
}

inline Json to_json(const ConfigType& c) {
  Json cs = Json::array();
  for (Subset s : c.classes) cs.push_back(subset_json(s));
  return Json{{"classes", cs}};
}

inline ConfigType config_from_json(const Json& j) {
  return guarded([&] {
    ConfigType c;
    for (const auto& s : array_at(j, "classes")) c.classes.push_back(subset_from_json(s));
    return c;
  });
}

// ---- chambers --------------------------------------------------------------

inline std::string positions_code(const std::vector<Position>& ps) {
  std::string s;
  for (auto p : ps) s.push_back(static_cast<char>(p));
  return s;
}

inline Json to_json(const ChamberSet& cs) {
  Json ws = Json::array();
  for (const auto& w : cs.walls) ws.push_back(subset_json(w.subset));
  Json chambers = Json::array();
  for (const auto& c : cs.chambers) {
    Json rep = Json::array();
    for (const auto& x : c.representative.weights) rep.push_back(x.str());
    chambers.push_back(Json{{"signs", positions_code(c.positions)}, {"representative", rep}});
  }
  return Json{{"genus", cs.genus},
              {"n", cs.n},
              {"granularity", to_string(cs.granularity)},
              {"walls", ws},
              {"count", cs.chambers.size()},
              {"chambers", chambers}};
}

inline ChamberSet chambers_from_json(const Json& j) {
  return guarded([&] {
    ChamberSet cs;
    cs.genus = j.at("genus").get<int>();
    cs.n = j.at("n").get<std::size_t>();
    cs.granularity = parse_granularity(j.at("granularity").get<std::string>());
    for (const auto& w : array_at(j, "walls")) cs.walls.push_back({subset_from_json(w), cs.granularity});
    for (const auto& c : array_at(j, "chambers")) {
      Chamber ch;
      for (char p : c.at("signs").get<std::string>()) {
        if (p != '+' && p != '-' && p != '0') throw Error(ErrorKind::ParseError, "bad sign code");
        ch.positions.push_back(static_cast<Position>(p));
      }
      if (ch.positions.size() != cs.walls.size())
        throw Error(ErrorKind::ParseError, "sign vector length differs from wall count");
      ch.representative.genus = cs.genus;
      for (const auto& x : c.at("representative"))
        ch.representative.weights.push_back(rational_from_json(x));
      cs.chambers.push_back(std::move(ch));
    }
    return cs;
  });
}

inline std::string cache_file_name(int genus, std::size_t n, Granularity g) {
  return "chambers_g" + std::to_string(genus) + "_n" + std::to_string(n) + "_" + to_string(g) +
         ".json";
}

/// enumerate_chambers backed by a directory of JSON files, one per
/// (g, n, granularity). An empty directory argument disables the cache. A
/// stale or unreadable file is recomputed and overwritten.
inline ChamberSet cached_chambers(int genus, std::size_t n, Granularity g, std::size_t limit,
                                  const std::string& cache_dir) {
  namespace fs = std::filesystem;
  if (cache_dir.empty()) return enumerate_chambers(genus, n, g, limit);
  if (n > limit)  // the guard applies to cache hits too
    return enumerate_chambers(genus, n, g, limit);
  fs::path file = fs::path(cache_dir) / cache_file_name(genus, n, g);
  if (std::ifstream in{file}) {
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      ChamberSet cs = chambers_from_json(parse(buf.str()));
      if (cs.genus == genus && cs.n == n && cs.granularity == g) return cs;
    } catch (const Error&) {
    }
  }
  ChamberSet cs = enumerate_chambers(genus, n, g, limit);
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out{tmp};
    out << dump(to_json(cs));
  }
  fs::rename(tmp, file, ec);
  return cs;
}

}  // namespace weightscape::io
