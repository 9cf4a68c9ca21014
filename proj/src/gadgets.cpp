// SPDX-License-Identifier: MIT
#include "flg/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "flg/error.hpp"
#include "flg/reference.hpp"

namespace flg {

std::optional<int> LabeledGraph::find(std::string_view name) const {
  auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

int LabeledGraph::node(std::string_view name) const {
  auto v = find(name);
  if (!v) throw PreconditionError("no node named '" + std::string(name) + "'");
  return *v;
}

int GadgetBuilder::atom(const std::string& name) {
  auto [it, fresh] = ids_.emplace(name, static_cast<int>(names_.size()));
  if (fresh) {
    names_.push_back(name);
    parent_.push_back(it->second);
  }
  return it->second;
}

int GadgetBuilder::find(int a) const {
  while (parent_[a] != a) a = parent_[a];
  return a;
}

void GadgetBuilder::add_node(const std::string& name) { atom(name); }

void GadgetBuilder::identify(const std::string& a, const std::string& b) {
  int ra = find(atom(a)), rb = find(atom(b));
  if (ra == rb) return;
  // The older atom stays the root so first names stay first.
  if (rb < ra) std::swap(ra, rb);
  parent_[rb] = ra;
}

void GadgetBuilder::add_edge(const std::string& a, const std::string& b) {
  edges_.emplace_back(atom(a), atom(b));
}

void GadgetBuilder::add_graph(const LabeledGraph& g, const std::string& prefix) {
  for (const auto& names : g.labels) {
    for (const auto& n : names) identify(prefix + names.front(), prefix + n);
  }
  for (auto [u, v] : g.graph.edges()) add_edge(prefix + g.labels[u].front(), prefix + g.labels[v].front());
}

LabeledGraph GadgetBuilder::build() const {
  LabeledGraph g;
  std::vector<int> node_of_root(names_.size(), -1);
  int count = 0;
  for (size_t a = 0; a < names_.size(); ++a) {
    int r = find(static_cast<int>(a));
    if (node_of_root[r] < 0) {
      node_of_root[r] = count++;
      g.labels.emplace_back();
    }
    int v = node_of_root[r];
    g.labels[v].push_back(names_[a]);
    g.index.emplace(names_[a], v);
  }
  g.graph = UGraph(count);
  for (auto [a, b] : edges_) {
    int u = node_of_root[find(a)], v = node_of_root[find(b)];
    if (u == v) throw Error("gadget identification creates a loop at " + names_[a]);
    g.graph.add_edge(u, v);
  }
  return g;
}

namespace {

using Namer = std::function<std::string(const std::string&)>;

void add_wheel(GadgetBuilder& b, const Namer& n) {
  for (const char* s : {"a", "b", "c", "d", "e", "f"}) b.add_node(n(s));
  for (const char* s : {"b", "c", "d", "e", "f"}) b.add_edge(n("a"), n(s));
  b.add_edge(n("b"), n("c"));
  b.add_edge(n("c"), n("d"));
  b.add_edge(n("d"), n("e"));
  b.add_edge(n("e"), n("f"));
  b.add_edge(n("f"), n("b"));
}

// tip_cd and tip_de name the nodes closing the triangles on cd and de.
void add_I(GadgetBuilder& b, const Namer& n, const std::string& tip_cd, const std::string& tip_de) {
  add_wheel(b, n);
  b.add_node(n("g"));
  b.add_node(n("h"));
  b.add_node(tip_cd);
  b.add_node(tip_de);
  b.add_edge(n("b"), n("g"));
  b.add_edge(n("f"), n("h"));
  b.add_edge(n("c"), tip_cd);
  b.add_edge(tip_cd, n("d"));
  b.add_edge(n("d"), tip_de);
  b.add_edge(tip_de, n("e"));
}

std::string slot_name(int k) { return std::string(1, "rst"[k]); }

}  // namespace

LabeledGraph build_wheel5() {
  GadgetBuilder b;
  add_wheel(b, [](const std::string& s) { return s; });
  return b.build();
}

LabeledGraph build_I() {
  GadgetBuilder b;
  add_I(b, [](const std::string& s) { return s; }, "i", "j");
  return b.build();
}

LabeledGraph build_Inv() {
  GadgetBuilder b;
  add_I(b, [](const std::string& s) { return s; }, "i", "j");
  add_I(b, [](const std::string& s) { return s + "'"; }, "j", "i'");
  return b.build();
}

LabeledGraph build_gad1(int i, int m) {
  if (m < 1) throw PreconditionError("a variable gadget needs at least one copy");
  GadgetBuilder b;
  const std::string x = "x" + std::to_string(i) + ".";
  for (int l = 1; l <= m; ++l) {
    const std::string suffix = std::to_string(l);
    Namer n = [&](const std::string& s) { return x + s + suffix; };
    add_I(b, n, n("i"), n("j"));
    if (l > 1) b.identify(x + "j" + std::to_string(l - 1), n("i"));
  }
  return b.build();
}

LabeledGraph build_gad2(int j) {
  const std::string p = "C" + std::to_string(j) + ".";
  GadgetBuilder b;
  for (const char* s : {"r", "r'", "a", "a'", "f", "f'", "s", "s'", "b", "b'", "c", "t", "t'", "e",
                        "e'", "d"}) {
    b.add_node(p + s);
  }
  auto tri = [&](const char* u, const char* v, const char* w) {
    b.add_edge(p + u, p + v);
    b.add_edge(p + v, p + w);
    b.add_edge(p + u, p + w);
  };
  tri("r", "a", "f");
  tri("s", "b", "c");
  tri("t", "e", "d");
  b.add_edge(p + "r", p + "r'");
  b.add_edge(p + "s", p + "s'");
  b.add_edge(p + "t", p + "t'");
  b.add_edge(p + "c", p + "d");
  const LabeledGraph inv = build_Inv();
  b.add_graph(inv, p + "inv1.");
  b.identify(p + "b", p + "inv1.g");
  b.identify(p + "b'", p + "inv1.b");
  b.identify(p + "a", p + "inv1.g'");
  b.identify(p + "a'", p + "inv1.b'");
  b.add_graph(inv, p + "inv2.");
  b.identify(p + "f", p + "inv2.g");
  b.identify(p + "f'", p + "inv2.b");
  b.identify(p + "e", p + "inv2.g'");
  b.identify(p + "e'", p + "inv2.b'");
  return b.build();
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared = -1;
  std::vector<Literal> cur;
  int cur_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == '%') continue;
    if (tok == "p") {
      std::string kind;
      if (declared >= 0 || !(ls >> kind >> f.variable_count >> declared) || kind != "cnf" ||
          f.variable_count < 0 || declared < 0) {
        throw ParseError("bad problem line", line_no);
      }
      continue;
    }
    if (declared < 0) throw ParseError("clause before the problem line", line_no);
    ls.clear();
    ls.str(line);
    long long v;
    while (ls >> v) {
      if (cur.empty()) cur_line = line_no;
      if (v == 0) {
        if (cur.size() != 3) throw ParseError("clause must have exactly three literals", cur_line);
        f.clauses.push_back({cur[0], cur[1], cur[2]});
        cur.clear();
        continue;
      }
      if (v > f.variable_count || -v > f.variable_count) {
        throw ParseError("variable out of range", line_no);
      }
      cur.push_back({static_cast<int>(v < 0 ? -v : v), v < 0});
    }
    if (!ls.eof()) throw ParseError("bad literal", line_no);
  }
  if (declared < 0) throw ParseError("missing problem line");
  if (!cur.empty()) throw ParseError("unterminated clause", cur_line);
  if (static_cast<int>(f.clauses.size()) != declared) {
    throw ParseError("clause count does not match the problem line");
  }
  validate(f);
  return f;
}

std::string serialize(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const Literal& l : c) out << (l.negated ? -l.var : l.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

void validate(const CnfFormula& f) {
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    for (const Literal& l : c) {
      if (l.var < 1 || l.var > f.variable_count) {
        throw PreconditionError("clause " + std::to_string(j + 1) + ": variable out of range");
      }
    }
    if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
      throw PreconditionError("clause " + std::to_string(j + 1) +
                              " repeats a variable; rewrite it with three distinct variables");
    }
  }
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.variable_count) {
    throw PreconditionError("assignment length differs from the variable count");
  }
  for (const auto& c : f.clauses) {
    bool sat = std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return assignment[l.var - 1] != l.negated;
    });
    if (!sat) return false;
  }
  return true;
}

LabeledGraph assemble_GF(const CnfFormula& f) {
  validate(f);
  const int m = static_cast<int>(f.clauses.size());
  if (m == 0) throw PreconditionError("formula has no clauses");
  GadgetBuilder b;
  for (int i = 1; i <= f.variable_count; ++i) b.add_graph(build_gad1(i, m), "");
  for (int j = 1; j <= m; ++j) b.add_graph(build_gad2(j), "");
  for (int j = 1; j <= m; ++j) {
    const std::string cj = "C" + std::to_string(j) + ".";
    for (int k = 0; k < 3; ++k) {
      const Literal& l = f.clauses[j - 1][k];
      const std::string x = "x" + std::to_string(l.var) + ".";
      const std::string js = std::to_string(j);
      const std::string s = slot_name(k);
      if (!l.negated) {
        b.identify(cj + s, x + "g" + js);
        b.identify(cj + s + "'", x + "b" + js);
      } else {
        b.identify(cj + s, x + "h" + js);
        b.identify(cj + s + "'", x + "f" + js);
      }
    }
  }
  return b.build();
}

unsigned branch_relation(const Digraph& d, const ArcCertificate& cert, int x, int xprime) {
  const Arc& a = d.arc(cert.map[x]);
  const Arc& p = d.arc(cert.map[xprime]);
  unsigned r = 0;
  if (p.head == a.tail) r |= kEnters;
  if (a.head == p.tail) r |= kLeaves;
  if (a.tail == p.tail) r |= kSharedTail;
  return r;
}

std::string to_string_relation(unsigned rel) {
  std::string s;
  auto add = [&](const char* part) {
    if (!s.empty()) s += '+';
    s += part;
  };
  if (rel & kEnters) add("in");
  if (rel & kLeaves) add("out");
  if (rel & kSharedTail) add("tail");
  return s.empty() ? "none" : s;
}

ArcCertificate certificate_by_labels(const LabeledGraph& g, const Digraph& d) {
  if (g.graph.node_count() != d.arc_count()) {
    throw PreconditionError("node and arc counts differ");
  }
  ArcCertificate cert;
  for (const auto& names : g.labels) {
    int a = d.find_label(names.front());
    if (a < 0) throw PreconditionError("no arc labelled '" + names.front() + "'");
    cert.map.push_back(a);
  }
  if (!cert.is_bijection(d.arc_count())) throw PreconditionError("arc labels are not distinct");
  return cert;
}

namespace {

// Relations of the three clause branches, or 0 where a branch is not
// purely entering or leaving.
std::array<unsigned, 3> pure_branches(const LabeledGraph& g, const Preimage& p,
                                      const std::string& prefix) {
  std::array<unsigned, 3> r{};
  for (int k = 0; k < 3; ++k) {
    const std::string s = slot_name(k);
    unsigned rel = branch_relation(p.digraph, p.cert, g.node(prefix + s), g.node(prefix + s + "'"));
    r[k] = (rel == kEnters || rel == kLeaves) ? rel : 0;
  }
  return r;
}

// Do the drawn arcs of `ref` meet each other in p exactly as drawn?
bool matches_reference(const LabeledGraph& g, const Preimage& p, const Digraph& ref,
                       const std::string& prefix) {
  std::vector<int> in_p, in_ref;
  for (int a = 0; a < ref.arc_count(); ++a) {
    const Arc& pa = p.digraph.arc(p.cert.map[g.node(prefix + ref.label(a))]);
    in_p.push_back(pa.tail);
    in_p.push_back(pa.head);
    in_ref.push_back(ref.arc(a).tail);
    in_ref.push_back(ref.arc(a).head);
  }
  for (size_t i = 0; i < in_p.size(); ++i) {
    for (size_t j = i + 1; j < in_p.size(); ++j) {
      if ((in_p[i] == in_p[j]) != (in_ref[i] == in_ref[j])) return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<ClausePreimage>& clause_catalogue() {
  static const std::vector<ClausePreimage> catalogue = [] {
    const LabeledGraph g = build_gad2(1);
    PreimageSet set = enumerate_preimages(g.graph);
    if (set.status != SearchStatus::Complete) throw Error("clause gadget search did not finish");
    std::vector<ClausePreimage> out;
    for (auto& p : set.members) {
      auto br = pure_branches(g, p, "C1.");
      out.push_back({std::move(p), br});
    }
    return out;
  }();
  return catalogue;
}

Preimage witness_from_assignment(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (!satisfies(f, assignment)) throw PreconditionError("assignment does not satisfy the formula");
  const LabeledGraph gf = assemble_GF(f);
  const int m = static_cast<int>(f.clauses.size());

  // Pieces are glued by merging the endpoints of arcs standing for the same
  // node of G_F.
  std::vector<int> parent;
  std::vector<Arc> arcs;       // global endpoints
  std::vector<int> node_of;    // G_F node per piece arc
  auto add_piece = [&](const Digraph& d, const std::function<int(int)>& gf_node) {
    const int base = static_cast<int>(parent.size());
    for (int v = 0; v < d.node_count(); ++v) parent.push_back(base + v);
    for (int a = 0; a < d.arc_count(); ++a) {
      arcs.push_back({base + d.arc(a).tail, base + d.arc(a).head});
      node_of.push_back(gf_node(a));
    }
  };

  const auto refs = reference_preimages_I();
  for (int i = 1; i <= f.variable_count; ++i) {
    const Digraph& d = refs[assignment[i - 1] ? 1 : 0];
    for (int l = 1; l <= m; ++l) {
      const std::string prefix = "x" + std::to_string(i) + ".";
      const std::string suffix = std::to_string(l);
      add_piece(d, [&](int a) { return gf.node(prefix + d.label(a) + suffix); });
    }
  }

  const auto& catalogue = clause_catalogue();
  const LabeledGraph gad2 = build_gad2(1);
  for (int j = 1; j <= m; ++j) {
    std::array<unsigned, 3> want{};
    for (int k = 0; k < 3; ++k) {
      const Literal& l = f.clauses[j - 1][k];
      bool value = assignment[l.var - 1] != l.negated;
      want[k] = value ? kLeaves : kEnters;
    }
    auto it = std::find_if(catalogue.begin(), catalogue.end(),
                           [&](const ClausePreimage& c) { return c.branches == want; });
    if (it == catalogue.end()) {
      throw Error("no clause gadget preimage with branch relations (" + to_string_relation(want[0]) +
                  "," + to_string_relation(want[1]) + "," + to_string_relation(want[2]) + ")");
    }
    const Preimage& p = it->preimage;
    std::vector<int> node_of_arc(p.digraph.arc_count());
    for (int v = 0; v < gad2.graph.node_count(); ++v) node_of_arc[p.cert.map[v]] = v;
    const std::string cj = "C" + std::to_string(j) + ".";
    add_piece(p.digraph, [&](int a) {
      const std::string& name = gad2.labels[node_of_arc[a]].front();
      return gf.node(cj + name.substr(3));  // drop "C1."
    });
  }

  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const int n = gf.graph.node_count();
  std::vector<int> rep(n, -1);
  for (size_t a = 0; a < arcs.size(); ++a) {
    int v = node_of[a];
    if (rep[v] < 0) {
      rep[v] = static_cast<int>(a);
      continue;
    }
    const Arc& r = arcs[rep[v]];
    parent[find(arcs[a].tail)] = find(r.tail);
    parent[find(arcs[a].head)] = find(r.head);
  }
  std::vector<int> id(parent.size(), -1);
  Digraph d;
  auto node = [&](int v) {
    int r = find(v);
    if (id[r] < 0) id[r] = d.add_node();
    return id[r];
  };
  for (int v = 0; v < n; ++v) {
    if (rep[v] < 0) throw Error("internal: G_F node " + gf.labels[v].front() + " has no arc");
    const Arc& a = arcs[rep[v]];
    int t = node(a.tail), h = node(a.head);
    if (t == h) throw Error("internal: gluing made a loop at " + gf.labels[v].front());
    d.add_arc(t, h, gf.labels[v].front());
  }
  Preimage w{std::move(d), ArcCertificate::identity(n)};
  if (!check_certificate(gf.graph, w.digraph, w.cert)) {
    throw Error("internal: glued witness is not a preimage of G_F");
  }
  return w;
}

bool Gad1Report::ok() const {
  return status == SearchStatus::Complete && mixed == 0 && scheme_i > 0 && scheme_ii > 0;
}

Gad1Report verify_gad1(int m, const PreimageOptions& opt) {
  const LabeledGraph g = build_gad1(1, m);
  PreimageSet set = enumerate_preimages(g.graph, opt);
  Gad1Report r;
  r.status = set.status;
  r.preimages = set.members.size();
  for (const auto& p : set.members) {
    bool all_i = true, all_ii = true;
    for (int l = 1; l <= m; ++l) {
      const std::string s = std::to_string(l);
      unsigned gb = branch_relation(p.digraph, p.cert, g.node("x1.g" + s), g.node("x1.b" + s));
      unsigned fh = branch_relation(p.digraph, p.cert, g.node("x1.f" + s), g.node("x1.h" + s));
      // (i): b enters g, h enters f.  (ii): g enters b, f enters h.
      all_i = all_i && (gb & kEnters) && (fh & kEnters);
      all_ii = all_ii && (gb & kLeaves) && (fh & kLeaves);
    }
    if (all_i && !all_ii) ++r.scheme_i;
    else if (all_ii && !all_i) ++r.scheme_ii;
    else ++r.mixed;
  }
  return r;
}

bool Gad2Report::ok() const {
  return status == SearchStatus::Complete && all_entering == 0 &&
         std::all_of(reference_matches.begin(), reference_matches.end(),
                     [](std::size_t c) { return c > 0; });
}

Gad2Report verify_gad2(const PreimageOptions& opt) {
  const LabeledGraph g = build_gad2(1);
  PreimageSet set = enumerate_preimages(g.graph, opt);
  const auto refs = reference_clause_preimages();
  Gad2Report r;
  r.status = set.status;
  r.preimages = set.members.size();
  std::set<std::string> realized;
  for (const auto& p : set.members) {
    std::array<unsigned, 3> rel{};
    std::string key = "(";
    for (int k = 0; k < 3; ++k) {
      const std::string s = slot_name(k);
      rel[k] = branch_relation(p.digraph, p.cert, g.node("C1." + s), g.node("C1." + s + "'"));
      key += (k ? "," : "") + to_string_relation(rel[k]);
    }
    key += ")";
    ++r.configurations[key];
    if ((rel[0] & kEnters) && (rel[1] & kEnters) && (rel[2] & kEnters)) ++r.all_entering;
    auto pure = pure_branches(g, p, "C1.");
    if (std::all_of(pure.begin(), pure.end(), [](unsigned x) { return x != 0; })) {
      realized.insert(to_string_relation(pure[0]) + "," + to_string_relation(pure[1]) + "," +
                      to_string_relation(pure[2]));
    }
    for (size_t k = 0; k < refs.size(); ++k) {
      if (matches_reference(g, p, refs[k], "C1.")) ++r.reference_matches[k];
    }
  }
  r.realized.assign(realized.begin(), realized.end());
  return r;
}

}  // namespace flg
