// SPDX-License-Identifier: MIT
// flg: command line front end. Exit codes: 0 ok / yes, 1 decision no,
// 2 usage or input error, 3 search budget exhausted.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flg/coloring.hpp"
#include "flg/error.hpp"
#include "flg/gadgets.hpp"
#include "flg/intersect.hpp"
#include "flg/io.hpp"
#include "flg/optimize.hpp"
#include "flg/preimage.hpp"
#include "flg/recognize.hpp"
#include "flg/reductions.hpp"

using json = nlohmann::ordered_json;
using namespace flg;

namespace {

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
  bool json = false;
  std::string dot;
  int jobs = 1;
};

json certificate_json(const ArcCertificate& c) {
  json m = json::object();
  for (size_t x = 0; x < c.map.size(); ++x) m[std::to_string(x + 1)] = c.map[x] + 1;
  return json{{"map", m}};
}

void write_json_file(const std::string& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

json labels_json(const LabeledGraph& g) {
  json m = json::object();
  for (size_t v = 0; v < g.labels.size(); ++v) m[std::to_string(v + 1)] = g.labels[v];
  return m;
}

std::string rational_json(const Rational& r) { return to_string(r); }

template <class G>
void maybe_dot(const Globals& gl, const G& graph) {
  if (!gl.dot.empty()) write_file(gl.dot, to_dot(graph));
}

// Emits a graph-producing result: plain text, or one JSON object.
void emit_graph(const Globals& gl, const std::string& key, const std::string& text, json extra = {}) {
  if (gl.json) {
    json j{{key, text}};
    if (extra.is_object()) {
      for (auto& [k, v] : extra.items()) j[k] = v;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<bool> parse_assignment(const std::string& arg, int n) {
  std::string text = arg;
  if (std::ifstream probe(arg); probe.good()) text = read_file(arg);
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  std::vector<bool> a;
  if (!compact.empty() && compact.find_first_not_of("01") == std::string::npos) {
    for (char ch : compact) a.push_back(ch == '1');
  } else {
    // Signed variable list, DIMACS style: 1 -2 3 (commas allowed, 0 ends).
    a.assign(n, false);
    std::vector<char> seen(n, 0);
    for (char& ch : text) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(text);
    long long v = 1;
    while (in >> v) {
      if (v == 0) break;
      long long x = v < 0 ? -v : v;
      if (x > n) throw ParseError("assignment names variable " + std::to_string(x) + " out of range");
      if (seen[x - 1]) throw ParseError("assignment repeats variable " + std::to_string(x));
      seen[x - 1] = 1;
      a[x - 1] = v > 0;
    }
    if (!in.eof() && v != 0) throw ParseError("assignment must be a 0/1 string or signed variables");
    for (int i = 0; i < n; ++i) {
      if (!seen[i]) throw ParseError("assignment misses variable " + std::to_string(i + 1));
    }
  }
  if (static_cast<int>(a.size()) != n) {
    throw ParseError("assignment has " + std::to_string(a.size()) + " values, formula has " +
                     std::to_string(n) + " variables");
  }
  return a;
}

json gad2_json(const Gad2Report& r) {
  json conf = json::object();
  for (auto& [k, v] : r.configurations) conf[k] = v;
  json refs = json::object();
  const char* names[] = {"a", "b", "c", "d", "e"};
  for (size_t k = 0; k < r.reference_matches.size(); ++k) refs[names[k]] = r.reference_matches[k];
  return json{{"all_entering", r.all_entering},
              {"preimages", r.preimages},
              {"status", r.status == SearchStatus::Complete ? "complete" : "budget_exhausted"},
              {"reference_matches", refs},
              {"realized", r.realized},
              {"configurations", conf},
              {"ok", r.ok()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facility location graphs: intersection graphs, recognition, gadgets, solvers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Machine-readable JSON on stdout");
  app.add_option("--dot", gl.dot, "Write the produced graph as DOT to this path");
  app.add_option("--jobs", gl.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string input, input2, cert_path, labels_path;

  auto* intersect = app.add_subcommand("intersect", "I(D) of a digraph, with its certificate");
  intersect->add_option("digraph", input, "Digraph file")->required();
  intersect->add_option("--cert", cert_path, "Write the certificate JSON here");
  intersect->callback([&] {
    action = [&] {
      Digraph d = parse_digraph_text(read_file(input));
      auto [g, cert] = intersection_graph(d);
      if (!cert_path.empty()) write_json_file(cert_path, certificate_json(cert));
      maybe_dot(gl, g);
      emit_graph(gl, "graph", serialize(g), json{{"certificate", certificate_json(cert)}});
      return 0;
    };
  });

  auto* recog = app.add_subcommand("recognize", "Recognize a triangle-free FL graph");
  recog->add_option("ugraph", input, "Graph file")->required();
  recog->add_option("--cert", cert_path, "Write the certificate JSON here");
  recog->callback([&] {
    action = [&] {
      UGraph g = parse_ugraph_text(read_file(input));
      Recognition r = recognize(g);
      if (!r.accepted) {
        json comp = json::array();
        for (int v : r.component) comp.push_back(v + 1);
        std::cout << json{{"component", comp}, {"cycles", r.cycles}}.dump(2) << "\n";
        return kExitNo;
      }
      if (!cert_path.empty()) write_json_file(cert_path, certificate_json(r.cert));
      maybe_dot(gl, r.digraph);
      emit_graph(gl, "digraph", serialize(r.digraph), json{{"certificate", certificate_json(r.cert)}});
      return 0;
    };
  });

  auto* color = app.add_subcommand("color", "At most 3 colours for a triangle-free FL graph");
  color->add_option("ugraph", input, "Graph file")->required();
  color->callback([&] {
    action = [&] {
      UGraph g = parse_ugraph_text(read_file(input));
      Coloring c = color_trianglefree_fl(g);
      json m = json::object();
      for (size_t v = 0; v < c.colors.size(); ++v) m[std::to_string(v + 1)] = c.colors[v];
      std::cout << json{{"colors", m}, {"count", c.count()}}.dump(2) << "\n";
      return 0;
    };
  });

  bool count_only = false, no_dedup = false, classes = false;
  int node_budget = -1;
  std::int64_t steps = PreimageOptions{}.step_limit;
  std::size_t max_out = 100;
  auto* pre = app.add_subcommand("preimages", "Enumerate preimages of a small graph");
  pre->add_option("ugraph", input, "Graph file")->required();
  pre->add_flag("--count-only", count_only, "Print only the count");
  pre->add_option("--budget", node_budget, "Largest digraph to report, in nodes (default 2n)");
  pre->add_option("--steps", steps, "Search node limit per worker");
  pre->add_flag("--no-dedup", no_dedup, "Also list sink merges (raw labelled preimages)");
  pre->add_option("--max", max_out, "Preimages to print in full");
  pre->add_flag("--classes", classes, "Also count preimages up to digraph isomorphism alone");
  pre->callback([&] {
    action = [&] {
      UGraph g = parse_ugraph_text(read_file(input));
      PreimageOptions opt;
      opt.node_budget = node_budget;
      opt.step_limit = steps;
      opt.dedup = !no_dedup;
      opt.jobs = gl.jobs;
      PreimageSet s = enumerate_preimages(g, opt);
      const bool complete = s.status == SearchStatus::Complete;
      json j{{"count", s.members.size()}};
      if (!complete) j["status"] = "budget_exhausted";
      if (classes) j["classes"] = count_unlabeled_classes(g, s);
      if (!count_only) {
        j["status"] = complete ? "complete" : "budget_exhausted";
        j["canonical"] = s.canonical;
        j["steps"] = s.steps;
        json list = json::array();
        for (size_t i = 0; i < s.members.size() && i < max_out; ++i) {
          list.push_back(serialize(s.members[i].digraph));
        }
        j["preimages"] = list;
      }
      if (!s.members.empty()) maybe_dot(gl, s.members.front().digraph);
      std::cout << j.dump(2) << "\n";
      return complete ? 0 : kExitBudget;
    };
  });

  auto* reduce = app.add_subcommand("reduce", "Graph constructions");
  reduce->require_subcommand(1);
  auto* sat2flg = reduce->add_subcommand("sat2flg", "G_F of a DIMACS 3-CNF formula");
  sat2flg->add_option("cnf", input, "CNF file")->required();
  sat2flg->add_option("--labels", labels_path, "Write node names JSON here");
  sat2flg->callback([&] {
    action = [&] {
      CnfFormula f = parse_dimacs_cnf(read_file(input));
      LabeledGraph g = assemble_GF(f);
      if (!labels_path.empty()) write_json_file(labels_path, labels_json(g));
      maybe_dot(gl, g.graph);
      emit_graph(gl, "graph", serialize(g.graph), json{{"labels", labels_json(g)}});
      return 0;
    };
  });
  auto* poljak = reduce->add_subcommand("poljak", "Subdivide every edge twice");
  poljak->add_option("ugraph", input, "Graph file")->required();
  poljak->callback([&] {
    action = [&] {
      Subdivision s = poljak_subdivision(parse_ugraph_text(read_file(input)));
      maybe_dot(gl, s.graph);
      emit_graph(gl, "graph", serialize(s.graph));
      return 0;
    };
  });
  int k = 3;
  auto* edgecolor = reduce->add_subcommand("edgecolor", "Digraph whose I(D) is k-colourable iff g is k-edge-colourable");
  edgecolor->add_option("ugraph", input, "Graph file")->required();
  edgecolor->add_option("--k", k, "Number of colours")->required()->check(CLI::PositiveNumber);
  edgecolor->callback([&] {
    action = [&] {
      EdgeColorReduction r = edgecolor_reduction(parse_ugraph_text(read_file(input)), k);
      maybe_dot(gl, r.digraph);
      emit_graph(gl, "digraph", serialize(r.digraph));
      return 0;
    };
  });
  auto* cubic = reduce->add_subcommand("cubic2flg", "Pattern-free preimage of a subdivided cubic graph");
  cubic->add_option("ugraph", input, "Graph file")->required();
  cubic->add_option("--cert", cert_path, "Write the certificate JSON here");
  cubic->callback([&] {
    action = [&] {
      HardInstance h = cubic_to_hard_digraph(parse_ugraph_text(read_file(input)));
      if (!cert_path.empty()) write_json_file(cert_path, certificate_json(h.cert));
      maybe_dot(gl, h.digraph);
      emit_graph(gl, "digraph", serialize(h.digraph), json{{"certificate", certificate_json(h.cert)}});
      return 0;
    };
  });

  auto* witness = app.add_subcommand("witness", "Preimage of G_F from a satisfying assignment");
  witness->add_option("cnf", input, "CNF file")->required();
  witness->add_option("assignment", input2, "File or literal: 0/1 string, or signed variables")->required();
  witness->add_option("--cert", cert_path, "Write the certificate JSON here");
  witness->callback([&] {
    action = [&] {
      CnfFormula f = parse_dimacs_cnf(read_file(input));
      std::vector<bool> a = parse_assignment(input2, f.variable_count);
      if (!satisfies(f, a)) {
        std::cerr << "flg: assignment does not satisfy the formula\n";
        return kExitNo;
      }
      Preimage w = witness_from_assignment(f, a);
      if (!cert_path.empty()) write_json_file(cert_path, certificate_json(w.cert));
      maybe_dot(gl, w.digraph);
      emit_graph(gl, "digraph", serialize(w.digraph), json{{"certificate", certificate_json(w.cert)}});
      return 0;
    };
  });

  int m = 1;
  auto* verify = app.add_subcommand("verify", "Exhaustive checks of the gadget properties");
  verify->require_subcommand(1);
  auto* gad1 = verify->add_subcommand("gad1", "Every preimage of the variable gadget is uniform");
  gad1->add_option("--m", m, "Copies of I")->check(CLI::Range(1, 8));
  gad1->callback([&] {
    action = [&] {
      PreimageOptions opt;
      opt.jobs = gl.jobs;
      Gad1Report r = verify_gad1(m, opt);
      json j{{"m", m},
             {"preimages", r.preimages},
             {"scheme_i", r.scheme_i},
             {"scheme_ii", r.scheme_ii},
             {"mixed", r.mixed},
             {"status", r.status == SearchStatus::Complete ? "complete" : "budget_exhausted"},
             {"ok", r.ok()}};
      std::cout << j.dump(2) << "\n";
      if (r.status != SearchStatus::Complete) return kExitBudget;
      return r.ok() ? 0 : kExitNo;
    };
  });
  auto* gad2 = verify->add_subcommand("gad2", "No preimage of the clause gadget has all branches entering");
  gad2->callback([&] {
    action = [&] {
      PreimageOptions opt;
      opt.jobs = gl.jobs;
      Gad2Report r = verify_gad2(opt);
      std::cout << gad2_json(r).dump(2) << "\n";
      if (r.status != SearchStatus::Complete) return kExitBudget;
      return r.ok() ? 0 : kExitNo;
    };
  });

  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->require_subcommand(1);
  auto* stable = solve->add_subcommand("stable", "Maximum weight stable set");
  stable->add_option("ugraph", input, "Graph file")->required();
  stable->callback([&] {
    action = [&] {
      StableSet s = max_stable_set(parse_ugraph_text(read_file(input)));
      json nodes = json::array();
      for (int v : s.nodes) nodes.push_back(v + 1);
      std::cout << json{{"nodes", nodes}, {"weight", rational_json(s.weight)}}.dump(2) << "\n";
      return 0;
    };
  });
  auto* uflp = solve->add_subcommand("uflp", "Uncapacitated facility location");
  uflp->add_option("instance", input, "Instance file")->required();
  uflp->callback([&] {
    action = [&] {
      UflpInstance inst = parse_uflp(read_file(input));
      UflpSolution s = solve_uflp(inst);
      json open = json::array();
      for (int v : s.open) open.push_back(v + 1);
      json assign = json::object();
      for (size_t v = 0; v < s.assignment.size(); ++v) {
        if (s.assignment[v] >= 0) assign[std::to_string(v + 1)] = s.assignment[v] + 1;
      }
      std::cout << json{{"open", open}, {"assignment", assign}, {"objective", rational_json(s.objective)}}
                       .dump(2)
                << "\n";
      return 0;
    };
  });

  std::vector<std::string> pattern_names;
  bool forbid = false;
  auto* patterns = app.add_subcommand("patterns", "Find T1-T4, F1-F4 in a digraph");
  patterns->add_option("digraph", input, "Digraph file")->required();
  patterns->add_option("--names", pattern_names, "Patterns to look for (default all)")->delimiter(',');
  patterns->add_flag("--forbid", forbid, "Exit 1 when any pattern is found");
  patterns->callback([&] {
    action = [&] {
      Digraph d = parse_digraph_text(read_file(input));
      std::vector<PatternName> names;
      for (const auto& s : pattern_names) names.push_back(pattern_from_string(s));
      if (names.empty()) names = all_patterns();
      auto hits = detect_patterns(d, names);
      json list = json::array();
      for (const auto& h : hits) {
        json emb = json::array();
        for (int v : h.embedding) emb.push_back(v + 1);
        list.push_back(json{{"pattern", to_string(h.name)}, {"embedding", emb}});
      }
      std::cout << json{{"count", hits.size()}, {"hits", list}}.dump(2) << "\n";
      return forbid && !hits.empty() ? kExitNo : 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    return action();
  } catch (const flg::Error& e) {
    std::cerr << "flg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "flg: " << e.what() << "\n";
    return kExitUsage;
  }
}
