// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flg/graph.hpp"
#include "flg/rational.hpp"

namespace flg {

struct StableSet {
  std::vector<int> nodes;  // sorted
  Rational weight{0};
};

bool is_stable(const UGraph& g, const std::vector<int>& nodes);

// Maximum weight stable set (cardinality when g has no weights) by
// branch and bound with a clique-cover bound. Nodes of weight <= 0 are never
// taken. Among optimal sets the lexicographically smallest node list wins.
// Throws PreconditionError above kMaxStableSetNodes nodes.
constexpr int kMaxStableSetNodes = 64;
StableSet max_stable_set(const UGraph& g);

// Facilities may open at any node; a node that stays closed is served along
// one of its out-arcs by an open head.
struct UflpInstance {
  Digraph digraph;
  std::vector<Rational> open_cost;    // f(v) per node
  std::vector<Rational> assign_cost;  // c(u,v) per arc
};

// Digraph format plus  f <node> <p/q>  and  k <arc> <p/q>  lines (1-indexed).
// Every node and every arc needs exactly one cost.
UflpInstance parse_uflp(std::string_view text);
std::string serialize(const UflpInstance& inst);
void validate(const UflpInstance& inst);

struct UflpSolution {
  std::vector<int> open;        // sorted
  std::vector<int> assignment;  // per node: arc index serving it, or -1 if open
  Rational objective{0};
};

// Each node open xor served by an out-arc whose head is open, and the
// objective equals the cost of that choice.
bool check_solution(const UflpInstance& inst, const UflpSolution& sol);

struct MwssInstance {
  UGraph graph;  // I(D), weight f(tail) - c(arc) per node
  Rational offset{0};  // sum of f
};

// UFLP optimum = offset - maximum weight of a stable set of graph.
MwssInstance uflp_to_mwss(const UflpInstance& inst);

// Tries every open set. Ties go to the lexicographically smallest open set;
// a closed node uses its cheapest arc into the open set, lowest index first.
// Throws PreconditionError above 20 nodes.
UflpSolution uflp_brute(const UflpInstance& inst);

// Exact, through max_stable_set on uflp_to_mwss. Ties follow the stable set
// tie-break, so the open set can differ from uflp_brute's on ties.
UflpSolution solve_uflp(const UflpInstance& inst);

// Heaviest colour class of color_trianglefree_fl, keeping only its
// positive-weight nodes. At least a third of the optimum.
StableSet approx_mwss_trianglefree(const UGraph& g);

}  // namespace flg
