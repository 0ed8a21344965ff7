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


// Command-line front end. Every subcommand builds a JSON document; the table
// form is rendered from that same document.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weightscape/io.hpp"
#include "weightscape/weightscape.hpp"

namespace ws = weightscape;
using ws::io::Json;

namespace {

struct Globals {
  bool json = false;
  std::string cache_dir;
  std::size_t limit = ws::kDefaultEnumerationLimit;
};

// Inline JSON, "-" for stdin, or a file path.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw ws::Error(ws::ErrorKind::InvalidArgument, "cannot read input '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load(const std::string& arg) { return ws::io::parse(read_input(arg)); }

ws::WeightData load_weights(const std::string& arg, ws::WeightMode mode = ws::WeightMode::Strict) {
  auto a = ws::io::weights_from_json(load(arg));
  return ws::validate(a.genus, std::move(a.weights), mode);
}

ws::WeightMode parse_mode(const std::string& s) {
  if (s == "strict") return ws::WeightMode::Strict;
  if (s == "zero") return ws::WeightMode::ZeroAllowed;
  if (s == "boundary") return ws::WeightMode::Boundary;
  throw ws::Error(ws::ErrorKind::InvalidArgument, "mode must be strict, zero or boundary");
}

Json subsets_json(const std::vector<ws::Subset>& ss) {
  Json out = Json::array();
  for (auto s : ss) out.push_back(ws::io::subset_json(s));
  return out;
}

Json rationals_json(const std::vector<ws::Rational>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(r.str());
  return out;
}

Json sign_vector_json(const ws::SignVector& sv) {
  Json walls = Json::array();
  for (std::size_t i = 0; i < sv.walls.size(); ++i)
    walls.push_back(Json{{"wall", ws::subset_string(sv.walls[i].subset)},
                         {"position", std::string(1, static_cast<char>(sv.positions[i]))}});
  return Json{{"granularity", ws::to_string(sv.granularity)},
              {"signs", sv.code()},
              {"on_wall", sv.has_on()},
              {"walls", walls}};
}

Json divisor_json(const ws::BoundaryDivisor& d) {
  bool nodal = d.kind == ws::BoundaryDivisor::Kind::Nodal;
  Json j{{"kind", nodal ? "nodal" : "coincidence"}, {"divisor", d.str()}};
  return j;
}

Json classification_json(const ws::DivisorClassification& c) {
  Json j{{"divisor", c.divisor.str()}, {"fate", ws::to_string(c.fate)}};
  if (c.fate != ws::DivisorFate::Preserved) j["light_side"] = ws::subset_string(c.light_side);
  if (!c.target_weights.empty()) j["target_weights"] = rationals_json(c.target_weights);
  return j;
}

Json ledger_json(const ws::DiscrepancyLedger& l) {
  Json steps = Json::array();
  for (const auto& s : l.steps)
    steps.push_back(Json{{"step", s.step},
                         {"coefficient", s.canonical.str()},
                         {"multiplicity", rationals_json(s.multiplicities)},
                         {"discrepancy", s.discrepancy.str()}});
  return steps;
}

Json family_list(const std::vector<ws::NamedFamily>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

// ---- table rendering -------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + scalar_text(j[i]);
    return s + "]";
  }
  if (j.is_object()) return j.dump();
  return j.dump();
}

bool is_record_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j)
    if (!e.is_object()) return false;
  return true;
}

void render_records(std::ostream& os, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? scalar_text(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(std::ostream& os, const Json& j, const std::string& indent = "") {
  if (!j.is_object()) {
    os << indent << scalar_text(j) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (is_record_list(v)) {
      os << indent << k << ":\n";
      render_records(os, v, indent + "  ");
    } else if (v.is_object()) {
      os << indent << k << ":\n";
      render(os, v, indent + "  ");
    } else {
      os << indent << k << ": " << scalar_text(v) << '\n';
    }
  }
}

int exit_code(ws::ErrorKind k) {
  switch (k) {
    case ws::ErrorKind::LimitExceeded: return 2;
    case ws::ErrorKind::NonterminatingContraction:
    case ws::ErrorKind::Internal: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted pointed stable curves: chambers, strata, reductions, GIT, discrepancies."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of a table");
  app.add_option("--cache-dir", g.cache_dir, "Chamber cache directory (default $WEIGHTSCAPE_CACHE)");
  app.add_option("--limit", g.limit, "Largest n the enumerations accept");

  std::function<Json()> action;
  auto command = [&](const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  };

  std::string weights, weights_b, tree_arg, t_arg, config_arg, mode = "strict", gran = "fine",
                                                                 keep, blocks, family, tower;
  int genus = 0, n = 0, k = 0, max_codim = 1;
  std::string alpha, beta;

  auto* validate = command("validate", "Check weight data in a membership mode");
  validate->add_option("--weights", weights, "Weight JSON")->required();
  validate->add_option("--mode", mode, "strict | zero | boundary");
  validate->callback([&] {
    action = [&] {
      auto a = load_weights(weights, parse_mode(mode));
      return Json{{"valid", true}, {"weights", ws::io::to_json(a)},
                  {"log_degree", a.log_degree().str()}};
    };
  });

  auto* walls = command("walls", "List the walls of the weight domain");
  walls->add_option("--genus", genus, "Genus g (default 0)");
  walls->add_option("--n", n, "Number of markings")->required();
  walls->add_option("--granularity", gran, "fine | coarse");
  walls->callback([&] {
    action = [&] {
      const auto& ws_ = ws::walls(genus, static_cast<std::size_t>(n), ws::parse_granularity(gran));
      Json list = Json::array();
      for (const auto& w : ws_) list.push_back(ws::subset_string(w.subset));
      return Json{{"genus", genus}, {"n", n}, {"granularity", gran},
                  {"count", ws_.size()}, {"walls", list}};
    };
  });

  auto* chambers = command("chambers", "Enumerate open chambers (cached)");
  chambers->add_option("--genus", genus, "Genus g (default 0)");
  chambers->add_option("--n", n, "Number of markings")->required();
  chambers->add_option("--granularity", gran, "fine | coarse");
  chambers->callback([&] {
    action = [&] {
      auto cs = ws::io::cached_chambers(genus, static_cast<std::size_t>(n),
                                        ws::parse_granularity(gran), g.limit, g.cache_dir);
      return ws::io::to_json(cs);
    };
  });

  auto* locate = command("locate", "Position of weight data against every wall");
  locate->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  locate->add_option("--granularity", gran, "fine or coarse (default fine)");
  locate->callback([&] {
    action = [&] {
      auto a = load_weights(weights, ws::WeightMode::ZeroAllowed);
      return sign_vector_json(ws::locate(a, ws::parse_granularity(gran)));
    };
  });

  auto* same = command("same-chamber", "Whether two weight data share an open chamber");
  same->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  same->add_option("--other", weights_b, "Second weight data")->required();
  same->add_option("--granularity", gran, "fine or coarse (default fine)");
  same->callback([&] {
    action = [&] {
      return Json{{"same_chamber", ws::same_chamber(load_weights(weights), load_weights(weights_b),
                                                    ws::parse_granularity(gran))}};
    };
  });

  auto* perturb = command("perturb", "Move weight data into a fine open chamber");
  perturb->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  perturb->callback([&] {
    action = [&] {
      auto a = load_weights(weights);
      return Json{{"epsilon", ws::perturbation_epsilon(a).str()},
                  {"weights", ws::io::to_json(ws::perturb_to_fine_chamber(a))}};
    };
  });

  auto* ucurve = command("ucurve", "Weight data for the universal curve");
  ucurve->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  ucurve->callback([&] {
    action = [&] { return Json{{"weights", ws::io::to_json(ws::universal_curve_weight(load_weights(weights)))}}; };
  });

  auto* stabilize = command("stabilize", "Reduce an A-stable tree to B-stability");
  stabilize->add_option("--tree", tree_arg, "Dual graph: JSON, file or -")->required();
  stabilize->add_option("--from", weights, "A")->required();
  stabilize->add_option("--to", weights_b, "B (zero weights allowed)")->required();
  stabilize->callback([&] {
    action = [&] {
      auto t = ws::io::tree_from_json(load(tree_arg));
      auto out = ws::stabilize(t, load_weights(weights),
                               load_weights(weights_b, ws::WeightMode::ZeroAllowed));
      return Json{{"tree", ws::io::to_json(out)}};
    };
  });

  auto* forget = command("forget", "Drop markings and stabilize");
  forget->add_option("--tree", tree_arg, "Dual graph: JSON, file or -")->required();
  forget->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  forget->add_option("--keep", keep, "Markings to keep, e.g. 1,2,4")->required();
  forget->callback([&] {
    action = [&] {
      std::vector<int> members;
      std::stringstream ss(keep);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          members.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
          throw ws::Error(ws::ErrorKind::ParseError, "bad marking '" + item + "'");
        }
      }
      auto t = ws::io::tree_from_json(load(tree_arg));
      return Json{{"tree", ws::io::to_json(ws::forget(t, load_weights(weights), ws::subset_from(members)))}};
    };
  });

  auto* strata = command("strata", "A-stable strata up to a codimension");
  strata->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  strata->add_option("--max-codim", max_codim, "Largest codimension listed");
  strata->callback([&] {
    action = [&] {
      auto list = ws::enumerate_strata(load_weights(weights), max_codim, g.limit);
      Json out = Json::array();
      for (const auto& s : list)
        out.push_back(Json{{"codimension", s.codimension}, {"tree", ws::canonical_form(s.tree)}});
      return Json{{"count", list.size()}, {"strata", out}};
    };
  });

  auto* boundary = command("boundary", "Boundary divisors");
  boundary->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  boundary->add_option("--blocks", blocks, "Equal-weight blocks, e.g. [[1,2],[3,4]]");
  boundary->callback([&] {
    action = [&] {
      auto a = load_weights(weights);
      auto ds = ws::boundary_divisors(a);
      std::size_t nodal = 0;
      Json list = Json::array();
      for (const auto& d : ds) {
        nodal += d.kind == ws::BoundaryDivisor::Kind::Nodal;
        list.push_back(divisor_json(d));
      }
      Json out{{"nodal", nodal}, {"coincidence", ds.size() - nodal}, {"divisors", list}};
      if (!blocks.empty()) {
        std::vector<ws::Subset> bs;
        for (const auto& b : load(blocks)) bs.push_back(ws::io::subset_from_json(b));
        auto orbits = ws::symmetrized_boundary_count(a, bs);
        out["orbits"] = Json{{"nodal", orbits.nodal}, {"coincidence", orbits.coincidence},
                             {"total", orbits.total()}};
      }
      return out;
    };
  });

  auto* reduce = command("reduce", "What the reduction A -> B does to each boundary divisor");
  reduce->add_option("--from", weights, "A")->required();
  reduce->add_option("--to", weights_b, "B")->required();
  reduce->callback([&] {
    action = [&] {
      auto a = load_weights(weights);
      auto b = load_weights(weights_b, ws::WeightMode::ZeroAllowed);
      Json list = Json::array();
      for (const auto& c : ws::contracted_divisors(a, b)) list.push_back(classification_json(c));
      return Json{{"isomorphism", ws::is_reduction_iso(a, b)}, {"divisors", list}};
    };
  });

  auto* profile = command("blowup-profile", "Whether a subset is a blow-up center profile");
  profile->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  profile->add_option("--subset", keep, "e.g. [1,2,3]")->required();
  profile->callback([&] {
    action = [&] {
      return Json{{"blowup_profile", ws::is_blowup_profile(load_weights(weights),
                                                           ws::io::subset_from_json(load(keep)))}};
    };
  });

  int dg = 0, db = 0, dd = 0, dk = 1, dsigma = 0, dN = 2;
  auto* degree = command("degree-case", "Vanishing case of the line-series degree formula");
  degree->add_option("--g", dg, "Genus");
  degree->add_option("--b", db, "Degree of B");
  degree->add_option("--d", dd, "Degree of D");
  degree->add_option("--k", dk, "Twist k > 0");
  degree->add_option("--sigma", dsigma, "Length of Sigma (0, 1 or 2)");
  degree->add_option("--N", dN, "Power N >= 2");
  degree->callback([&] {
    action = [&] {
      ws::LineSeriesParams p{dg, db, dd, dk, dsigma, dN};
      auto c = ws::degree_vanishing_case(p);
      return Json{{"case", ws::to_string(c)}, {"deg_F", p.degree_f()}, {"deg_M", p.degree_m()}};
    };
  });

  auto* git_stab = command("git-stability", "GIT stability of a coincidence type");
  git_stab->add_option("--config", config_arg, R"(Coincidence classes, {"classes": [[1,2],[3],...]})")->required();
  git_stab->add_option("--t", t_arg, R"(Linearization, {"t": [...]} with sum 2)")->required();
  git_stab->callback([&] {
    action = [&] {
      auto t = ws::io::linearization_from_json(load(t_arg));
      auto c = ws::io::config_from_json(load(config_arg));
      return Json{{"stability", ws::to_string(ws::stability(c, t))}};
    };
  });

  auto* git_ss = command("git-sstypes", "Strictly semistable types of a linearization");
  git_ss->add_option("--t", t_arg, R"(Linearization, {"t": [...]} with sum 2)")->required();
  git_ss->callback([&] {
    action = [&] {
      auto t = ws::io::linearization_from_json(load(t_arg));
      auto types = ws::strictly_semistable_types(t);
      return Json{{"typical", ws::is_typical(t)}, {"count", types.size()},
                  {"types", subsets_json(types)}};
    };
  });

  auto* tau = command("tau", "Rescale weight data onto the sum-2 boundary");
  tau->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  tau->callback([&] {
    action = [&] {
      auto b = ws::io::weights_from_json(load(weights));
      return ws::io::to_json(ws::tau(b));
    };
  });

  auto* match = command("match-quotient", "Compare a chamber with a GIT quotient");
  match->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  match->add_option("--t", t_arg, R"(Linearization, {"t": [...]} with sum 2)")->required();
  match->callback([&] {
    action = [&] {
      auto r = ws::chamber_matches_quotient(load_weights(weights),
                                            ws::io::linearization_from_json(load(t_arg)));
      return Json{{"matches", r.matches}, {"mismatches", subsets_json(r.mismatches)},
                  {"ambiguous", subsets_json(r.ambiguous)}};
    };
  });

  auto* lc_kap = command("lc-kapranov", "Discrepancy ledger of the Kapranov tower");
  lc_kap->add_option("--n", n, "Number of markings")->required();
  lc_kap->add_option("--k", k, "Tower height (default n-4)");
  lc_kap->add_option("--alpha", alpha, "Boundary coefficient alpha")->required();
  lc_kap->callback([&] {
    action = [&] {
      int height = k > 0 ? k : n - 4;
      auto l = ws::kapranov_ledger(n, height, ws::Rational::parse(alpha));
      auto range = ws::kapranov_ample_lc_range(n);
      return Json{{"n", n}, {"k", height}, {"alpha", alpha},
                  {"log_canonical", l.log_canonical()},
                  {"ample_lc_range", range.str()},
                  {"steps", ledger_json(l)}};
    };
  });

  auto* lc_keel = command("lc-keel", "Discrepancy ledger of the Keel tower");
  lc_keel->add_option("--n", n, "Number of markings")->required();
  lc_keel->add_option("--alpha", alpha, "Boundary coefficient alpha")->required();
  lc_keel->add_option("--beta", beta, "Boundary coefficient beta")->required();
  lc_keel->callback([&] {
    action = [&] {
      auto v = ws::keel_ledger(n, ws::Rational::parse(alpha), ws::Rational::parse(beta));
      return Json{{"n", n}, {"alpha", alpha}, {"beta", beta},
                  {"ample", v.ample}, {"log_canonical", v.log_canonical},
                  {"beta_bound", v.beta_bound}, {"mixed_bound", v.mixed_bound},
                  {"steps", ledger_json(v.ledger)}};
    };
  });

  auto* r76 = command("remark76", "Six points of weight 1/3");
  r76->callback([&] {
    action = [&] {
      auto r = ws::six_point_check();
      return Json{{"range", r.range.str()},
                  {"range_lower", r.range.lower.str()},
                  {"range_upper", r.range.upper.str()},
                  {"semistable_type_count", r.semistable_types.size()},
                  {"semistable_types", subsets_json(r.semistable_types)},
                  {"points_blown_up", r.points_blown_up},
                  {"lines_blown_up", r.lines_blown_up},
                  {"holds", r.holds}};
    };
  });

  auto* ncls = command("named-classify", "Named families whose inequalities hold");
  ncls->add_option("--weights", weights, "Weight data: JSON, file or -")->required();
  ncls->callback([&] {
    action = [&] { return Json{{"families", family_list(ws::classify(load_weights(weights)))}}; };
  });

  auto* nw = command("named-weights", "Representative weights of a named family");
  nw->add_option("--family", family, "W(r,s) | X(k) | Y(k) | LM")->required();
  nw->add_option("--n", n, "Number of markings")->required();
  nw->callback([&] {
    action = [&] {
      auto f = ws::parse_family(family, n);
      return Json{{"family", f.str()}, {"weights", ws::io::to_json(ws::weights_for(f))}};
    };
  });

  auto* seq = command("blowup-seq", "Divisors contracted along a named tower");
  seq->add_option("--tower", tower, "X | Y | W")->required();
  seq->add_option("--n", n, "Number of markings")->required();
  seq->callback([&] {
    action = [&] {
      Json steps = Json::array();
      for (const auto& s : ws::blowup_sequence(ws::parse_tower(tower), n)) {
        Json centers = Json::array();
        for (const auto& c : s.contracted) centers.push_back(c.divisor.str());
        steps.push_back(Json{{"source", s.source.str()},
                             {"target", s.target.str()},
                             {"exceptional", s.exceptional_count()},
                             {"becomes_coincidence", s.becomes_coincidence},
                             {"isomorphism", s.isomorphism},
                             {"contracted", centers}});
      }
      return Json{{"tower", tower}, {"n", n}, {"steps", steps}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }
  if (g.cache_dir.empty())
    if (const char* env = std::getenv("WEIGHTSCAPE_CACHE")) g.cache_dir = env;

  try {
    Json out = action();
    if (g.json) std::cout << ws::io::dump(out);
    else render(std::cout, out);
  } catch (const ws::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
