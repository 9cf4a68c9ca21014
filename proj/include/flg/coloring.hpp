// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flg/graph.hpp"

namespace flg {

// colors[v] is the colour of node v, numbered 0.. in first-seen order.
struct Coloring {
  std::vector<int> colors;
  int count() const;
};

bool is_proper(const UGraph& g, const Coloring& c);

// Renumbers colours by first appearance along node order.
Coloring canonical(Coloring c);

// At most 3 colours in O(|E|): 2-colour G' (3 colours on an odd cycle), then
// put the removed degree-2 edges back, recolouring one endpoint on a clash.
// Throws PreconditionError unless g is a triangle-free FL graph.
Coloring color_trianglefree_fl(const UGraph& g);

// Some proper k-colouring, or nothing. Exact backtracking (DSATUR order).
std::optional<Coloring> chromatic_brute(const UGraph& g, int k);

// Smallest k with a proper k-colouring.
int chromatic_number(const UGraph& g);

// Is there a proper k-edge-colouring? Exact backtracking.
bool edge_chromatic_brute(const UGraph& g, int k);

struct EdgeColorReduction {
  Digraph digraph;
  // Per edge of g, in g.edges() order: its arcs (u, v_i) and (v, v_i).
  std::vector<std::pair<int, int>> edge_arcs;
};

// Per edge e_i = uv: a node v_i, arcs (u, v_i), (v, v_i), and k-1 arcs
// leaving v_i into fresh sinks. chi(I(D)) <= k iff g is k-edge-colourable.
// Throws PreconditionError when k < 1.
EdgeColorReduction edgecolor_reduction(const UGraph& g, int k);

}  // namespace flg
