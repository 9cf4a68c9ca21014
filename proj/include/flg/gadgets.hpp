// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flg/graph.hpp"
#include "flg/intersect.hpp"
#include "flg/preimage.hpp"

namespace flg {

// A graph whose nodes carry one or more names. Gluing two gadget nodes
// keeps both names, so "C1.r" and "x2.g1" can denote the same node.
struct LabeledGraph {
  UGraph graph;
  std::vector<std::vector<std::string>> labels;  // per node, first name first
  std::map<std::string, int, std::less<>> index;

  std::optional<int> find(std::string_view name) const;
  int node(std::string_view name) const;  // throws PreconditionError
};

// Collects names, merges, and edges, then freezes them into a LabeledGraph.
// Nodes are numbered in order of their first name.
class GadgetBuilder {
 public:
  void add_node(const std::string& name);
  void identify(const std::string& a, const std::string& b);
  void add_edge(const std::string& a, const std::string& b);
  // Copies every node and edge of g with names prefixed by `prefix`.
  void add_graph(const LabeledGraph& g, const std::string& prefix);
  LabeledGraph build() const;

 private:
  int atom(const std::string& name);
  int find(int a) const;

  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> edges_;
};

// Hub a, rim b..f.
LabeledGraph build_wheel5();
// W5 plus the pendants g (at b), h (at f) and the triangle tips i (on cd),
// j (on de).
LabeledGraph build_I();
// Two copies of I sharing j. The second copy is mirrored: its unprimed j sits
// on c'd' and its i' on d'e'.
LabeledGraph build_Inv();

// m copies of I for variable i, copy l named x<i>.<letter><l>; j of copy l is
// i of copy l+1. Throws PreconditionError when m < 1.
LabeledGraph build_gad1(int i, int m);

// Clause gadget j: triangles {r,a,f}, {s,b,c}, {t,e,d}, pendants r',s',t',
// the edge cd, and two inverters named C<j>.inv1.* and C<j>.inv2.* carrying
// the branches aa'/bb' and ff'/ee'.
LabeledGraph build_gad2(int j);

struct Literal {
  int var = 1;  // 1-based
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

// DIMACS cnf. Every clause must have exactly three distinct variables.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string serialize(const CnfFormula& f);
// Throws PreconditionError naming the first offending clause.
void validate(const CnfFormula& f);
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

// G_F: every variable and clause gadget, glued along the literal branches.
LabeledGraph assemble_GF(const CnfFormula& f);

// Orientation of a branch (x, x') in a preimage.
enum BranchRelation : unsigned {
  kEnters = 1,     // x' enters x:  h(x') = t(x)
  kLeaves = 2,     // x enters x':  h(x) = t(x')
  kSharedTail = 4  // t(x) = t(x')
};
unsigned branch_relation(const Digraph& d, const ArcCertificate& cert, int x, int xprime);
std::string to_string_relation(unsigned rel);

// A preimage of assemble_GF(f).graph built from the gadget preimages that
// match the assignment. Throws PreconditionError when the assignment does
// not satisfy f.
Preimage witness_from_assignment(const CnfFormula& f, const std::vector<bool>& assignment);

struct Gad1Report {
  SearchStatus status = SearchStatus::Complete;
  std::size_t preimages = 0;
  std::size_t scheme_i = 0;   // every b enters g and every h enters f
  std::size_t scheme_ii = 0;  // every g enters b and every f enters h
  std::size_t mixed = 0;
  bool ok() const;
};

Gad1Report verify_gad1(int m, const PreimageOptions& opt = {});

struct Gad2Report {
  SearchStatus status = SearchStatus::Complete;
  std::size_t preimages = 0;
  std::size_t all_entering = 0;  // r', s', t' all enter r, s, t
  // Relation triples for (r,r'), (s,s'), (t,t') and how often each occurs.
  std::map<std::string, std::size_t> configurations;
  // Preimages agreeing with each of the five reference drawings.
  std::array<std::size_t, 5> reference_matches{};
  // Pure in/out triples that occur, out of the 8 possible.
  std::vector<std::string> realized;
  bool ok() const;
};

Gad2Report verify_gad2(const PreimageOptions& opt = {});

// Preimages of the clause gadget, cached after the first call. Each entry
// holds the pure relation of the three branches (kEnters or kLeaves), or 0
// when a branch is not pure.
struct ClausePreimage {
  Preimage preimage;
  std::array<unsigned, 3> branches{};
};
const std::vector<ClausePreimage>& clause_catalogue();

// Certificate taking node v of g to the arc of d labelled with v's first
// name. Throws PreconditionError on a missing or repeated label.
ArcCertificate certificate_by_labels(const LabeledGraph& g, const Digraph& d);

}  // namespace flg
