// SPDX-License-Identifier: MIT
// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).
//
// usage: acceptance [path/to/flg]
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "flg/coloring.hpp"
#include "flg/reference.hpp"
#include "flg/gadgets.hpp"
#include "flg/intersect.hpp"
#include "flg/io.hpp"
#include "flg/optimize.hpp"
#include "flg/preimage.hpp"
#include "flg/recognize.hpp"
#include "flg/reductions.hpp"
#include "support.hpp"

using namespace flg;
using namespace flg::test;

namespace {

// Time limits, in seconds.
constexpr double kW5Seconds = 10;
constexpr double kSmallGadgetSeconds = 10;
constexpr double kGad1Seconds = 60;
constexpr double kGad2Seconds = 600;
constexpr double kSweepSeconds = 1800;
constexpr double kLargeRecognizeSeconds = 10;
constexpr int kLargeEdges = 1'000'000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
              since(t0));
  std::fflush(stdout);
}

std::string run_command(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

Outcome criterion_w5(const std::string& flg_path) {
  const std::string file = std::string(FLG_DATA_DIR) + "/w5.ugr";
  auto t0 = Clock::now();
  std::size_t count = 0;
  std::string via;
  if (!flg_path.empty()) {
    std::string out = run_command("'" + flg_path + "' --json preimages --count-only '" + file + "'");
    auto pos = out.find("\"count\"");
    if (pos == std::string::npos) return {false, "no count in flg output: " + out};
    count = std::stoul(out.substr(out.find(':', pos) + 1));
    via = "flg preimages";
  } else {
    count = enumerate_preimages(parse_ugraph_text(read_file(file))).members.size();
    via = "library";
  }
  double secs = since(t0);
  return {count == 15 && secs < kW5Seconds, via + " count " + std::to_string(count) + ", expected 15"};
}

Outcome criterion_small_gadgets() {
  auto t0 = Clock::now();
  LabeledGraph i = build_I();
  PreimageSet s = enumerate_preimages(i.graph);
  double t_i = since(t0);
  int matched = 0;
  for (const Digraph& ref : reference_preimages_I()) {
    ArcCertificate rc = certificate_by_labels(i, ref);
    int hits = 0;
    for (const Preimage& p : s.members) hits += labeled_digraph_iso(p.digraph, ref, p.cert, rc);
    matched += hits == 1;
  }
  // Triangle with a branch on each corner. The count that matters is the
  // number of distinct shapes of the three triangle arcs; the branches add
  // labelled variants of the same shape.
  t0 = Clock::now();
  UGraph delta = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
  PreimageSet d = enumerate_preimages(delta);
  std::map<std::vector<int>, int> shapes;
  for (const Preimage& p : d.members) ++shapes[arc_shape(p.digraph, {p.cert.map[0], p.cert.map[1], p.cert.map[2]})];
  double t_d = since(t0);
  bool ok = s.members.size() == 2 && matched == 2 && shapes.size() == 3 && t_i < kSmallGadgetSeconds &&
            t_d < kSmallGadgetSeconds;
  return {ok, "I: " + std::to_string(s.members.size()) + " preimages, " + std::to_string(matched) +
                  "/2 reference matches; triangle: " + std::to_string(shapes.size()) +
                  " configurations (" + std::to_string(d.members.size()) + " labelled preimages)"};
}

Outcome criterion_gad1() {
  auto t0 = Clock::now();
  Gad1Report r = verify_gad1(1);
  double secs = since(t0);
  bool ok = r.ok() && r.mixed == 0 && r.preimages > 0 && secs < kGad1Seconds;
  return {ok, std::to_string(r.preimages) + " preimages: " + std::to_string(r.scheme_i) + " scheme (i), " +
                  std::to_string(r.scheme_ii) + " scheme (ii), " + std::to_string(r.mixed) + " mixed"};
}

Outcome criterion_gad2() {
  auto t0 = Clock::now();
  Gad2Report r = verify_gad2();
  double secs = since(t0);
  std::size_t matching = 0;
  int drawings_hit = 0;
  for (std::size_t c : r.reference_matches) {
    matching += c;
    drawings_hit += c > 0;
  }
  bool complete = r.status == SearchStatus::Complete;
  bool ok = complete && r.all_entering == 0 && matching >= 5 && drawings_hit == 5 && secs < kGad2Seconds;
  return {ok, std::string(complete ? "complete" : "budget exhausted") + ", " + std::to_string(r.preimages) +
                  " preimages, " + std::to_string(r.all_entering) + " all-entering, " +
                  std::to_string(matching) + " matching the drawings (" + std::to_string(drawings_hit) +
                  "/5 drawings hit)"};
}

Outcome criterion_witness() {
  // Every ordered clause over three distinct variables, one or two clauses.
  std::vector<std::array<Literal, 3>> clauses;
  const std::array<std::array<int, 3>, 6> orders{{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (const auto& o : orders) {
    for (int signs = 0; signs < 8; ++signs) {
      std::array<Literal, 3> c;
      for (int k = 0; k < 3; ++k) c[k] = {o[k], bool(signs >> k & 1)};
      clauses.push_back(c);
    }
  }
  std::size_t formulas = 0, checked = 0, failed = 0;
  auto run = [&](const CnfFormula& f) {
    LabeledGraph gf = assemble_GF(f);
    bool any = false;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<bool> a{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
      if (!satisfies(f, a)) continue;
      any = true;
      ++checked;
      Preimage w = witness_from_assignment(f, a);
      if (!check_certificate(gf.graph, w.digraph, w.cert)) ++failed;
    }
    formulas += any;
  };
  for (const auto& c1 : clauses) {
    CnfFormula f;
    f.variable_count = 3;
    f.clauses = {c1};
    run(f);
    for (const auto& c2 : clauses) {
      f.clauses = {c1, c2};
      run(f);
    }
  }
  return {failed == 0 && checked > 0, std::to_string(formulas) + " satisfiable formulas, " +
                                          std::to_string(checked) + " witnesses, " + std::to_string(failed) +
                                          " failed"};
}

Outcome criterion_completeness() {
  GenerateOptions opt;
  opt.max_nodes = 8;
  opt.triangle_free = true;
  std::size_t graphs = 0, accepted = 0, disagree = 0, bad_cert = 0, unknown = 0;
  auto t0 = Clock::now();
  for_each_graph(opt, [&](const UGraph& g) {
    ++graphs;
    Recognition r = recognize(g);
    PreimageDecision d = has_preimage(g);
    if (d.answer == Answer::Unknown) ++unknown;
    if (r.accepted != (d.answer == Answer::Yes)) ++disagree;
    if (r.accepted) {
      ++accepted;
      if (!check_certificate(g, r.digraph, r.cert)) ++bad_cert;
    }
  });
  double secs = since(t0);
  bool ok = graphs == 582 && disagree == 0 && bad_cert == 0 && unknown == 0 && secs < kSweepSeconds;
  return {ok, std::to_string(graphs) + " graphs, " + std::to_string(accepted) + " accepted, " +
                  std::to_string(disagree) + " disagreements, " + std::to_string(bad_cert) +
                  " bad certificates, " + std::to_string(unknown) + " undecided"};
}

Outcome criterion_coloring() {
  Rng rng(7007);
  std::uniform_int_distribution<int> size(1, 40);
  int instances = 0, small = 0, bad = 0;
  while (instances < 1000) {
    UGraph g = random_fl_trianglefree(rng, size(rng));
    if (!recognize(g).accepted) continue;
    ++instances;
    Coloring c = color_trianglefree_fl(g);
    if (!is_proper(g, c) || c.count() > 3) ++bad;
    if (g.node_count() <= 12) {
      ++small;
      if (c.count() < chromatic_number(g)) ++bad;
    }
  }
  return {bad == 0, std::to_string(instances) + " graphs (" + std::to_string(small) + " with <= 12 nodes), " +
                        std::to_string(bad) + " violations"};
}

Outcome criterion_edgecolor() {
  GenerateOptions opt;
  opt.max_nodes = 8;
  opt.max_edges = 10;
  std::size_t graphs = 0, checks = 0, mismatches = 0;
  for_each_graph(opt, [&](const UGraph& g) {
    ++graphs;
    for (int k = 1; k <= 4; ++k) {
      bool left = edge_chromatic_brute(g, k);
      EdgeColorReduction r = edgecolor_reduction(g, k);
      bool right = chromatic_brute(intersection_graph_unchecked(r.digraph), k).has_value();
      ++checks;
      mismatches += left != right;
    }
  });
  return {mismatches == 0, std::to_string(graphs) + " graphs, " + std::to_string(checks) + " checks, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_poljak() {
  GenerateOptions opt;
  opt.max_nodes = 9;
  opt.max_edges = 12;
  std::size_t graphs = 0, wrong = 0;
  for_each_graph(opt, [&](const UGraph& g) {
    ++graphs;
    Subdivision s = poljak_subdivision(g);
    int lhs = static_cast<int>(max_stable_set(s.graph).nodes.size());
    if (lhs != naive_stable_number(g) + g.edge_count()) ++wrong;
  });
  return {wrong == 0, std::to_string(graphs) + " graphs, " + std::to_string(wrong) + " mismatches"};
}

Outcome criterion_uflp() {
  Rng rng(1010);
  std::uniform_int_distribution<int> nodes(1, 8), arcs(0, 14), num(0, 30), den(1, 7);
  int bad_objective = 0, bad_solution = 0;
  for (int it = 0; it < 500; ++it) {
    UflpInstance inst;
    int n = nodes(rng);
    inst.digraph = n >= 2 ? random_digraph(rng, n, arcs(rng)) : Digraph(n);
    for (int v = 0; v < n; ++v) inst.open_cost.emplace_back(num(rng), den(rng));
    for (int a = 0; a < inst.digraph.arc_count(); ++a) inst.assign_cost.emplace_back(num(rng), den(rng));
    UflpSolution brute = uflp_brute(inst);
    MwssInstance w = uflp_to_mwss(inst);
    if (brute.objective != w.offset - naive_max_weight_stable(w.graph)) ++bad_objective;
    UflpSolution s = solve_uflp(inst);
    if (!check_solution(inst, s) || s.objective != brute.objective) ++bad_solution;
  }
  return {bad_objective == 0 && bad_solution == 0,
          "500 instances, " + std::to_string(bad_objective) + " objective mismatches, " +
              std::to_string(bad_solution) + " invalid solutions"};
}

Outcome criterion_hard_instances() {
  std::string detail;
  bool ok = true;
  const std::vector<std::pair<std::string, UGraph>> graphs = {
      {"K4", complete_graph(4)}, {"prism", prism_graph()}, {"Petersen", petersen_graph()}};
  for (const auto& [name, g] : graphs) {
    HardInstance h = cubic_to_hard_digraph(g);
    bool cert = check_certificate(h.subdivision.graph, h.digraph, h.cert);
    std::size_t hits = detect_patterns(h.digraph, hardness_patterns()).size();
    int max_in = 0;
    for (int d : h.digraph.in_degrees()) max_in = std::max(max_in, d);
    ok &= cert && hits == 0 && max_in <= 2;
    if (!detail.empty()) detail += "; ";
    detail += name + ": cert " + (cert ? "ok" : "BAD") + ", " + std::to_string(hits) + " hits, max in-degree " +
              std::to_string(max_in);
  }
  return {ok, detail};
}

// Out-degree one everywhere (long directed cycles with in-trees hanging
// off them), plus a second out-arc at some nodes nothing enters. Its
// intersection graph is triangle-free and every component has one cycle.
UGraph large_accepted_instance(Rng& rng, int target_edges) {
  const int n = target_edges * 9 / 10;
  std::vector<int> parent(n, -1);
  std::uniform_int_distribution<int> len(4, 60);
  int v = 0;
  const int cycle_nodes = n / 10;
  while (v + 4 <= cycle_nodes) {
    int l = std::min(len(rng), cycle_nodes - v);
    if (l < 4) break;
    for (int i = 0; i < l; ++i) parent[v + i] = v + (i + 1) % l;
    v += l;
  }
  for (int u = v; u < n; ++u) parent[u] = std::uniform_int_distribution<int>(0, u - 1)(rng);
  Digraph d(n);
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u) {
    d.add_arc(u, parent[u]);
    ++indeg[parent[u]];
  }
  // A fork at u is safe while nothing enters u; it also makes the new head
  // unavailable as a fork later.
  std::uniform_int_distribution<int> any(0, n - 1);
  std::vector<char> forked(n, 0);
  for (int u = 0; u < n && d.arc_count() < target_edges; ++u) {
    if (indeg[u] != 0) continue;
    int w = any(rng);
    if (w == u || w == parent[u] || forked[w]) continue;
    d.add_arc(u, w);
    forked[u] = 1;
    ++indeg[w];
  }
  UGraph g = intersection_graph_unchecked(d);
  return permute(g, random_permutation(rng, g.node_count()));
}

Outcome criterion_large_recognize() {
  Rng rng(12);
  UGraph g = large_accepted_instance(rng, kLargeEdges);
  auto t0 = Clock::now();
  Recognition r = recognize(g);
  double secs = since(t0);
  bool cert = r.accepted && check_certificate(g, r.digraph, r.cert);
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d nodes, %d edges, %s in %.2fs (limit %.0fs)", g.node_count(),
                g.edge_count(), r.accepted ? (cert ? "accepted with certificate" : "accepted, BAD certificate")
                                           : "refused",
                secs, kLargeRecognizeSeconds);
  return {cert && g.edge_count() >= kLargeEdges && secs < kLargeRecognizeSeconds, buf};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string flg_path = argc > 1 ? argv[1] : "";
  report(1, "W5 preimage count", [&] { return criterion_w5(flg_path); });
  report(2, "I and triangle gadget preimages", criterion_small_gadgets);
  report(3, "variable gadget orientation, m=1", criterion_gad1);
  report(4, "clause gadget", criterion_gad2);
  report(5, "witnesses for satisfiable formulas", criterion_witness);
  report(6, "recognition completeness, <= 8 nodes", criterion_completeness);
  report(7, "three-colouring", criterion_coloring);
  report(8, "edge-colouring reduction", criterion_edgecolor);
  report(9, "subdivision stable set identity", criterion_poljak);
  report(10, "UFLP and stable set equivalence", criterion_uflp);
  report(11, "hard UFLP instances", criterion_hard_instances);
  report(12, "recognition at 10^6 edges", criterion_large_recognize);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
