// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>
#include <vector>

#include "flg/graph.hpp"

namespace flg {

// Reference digraphs drawn by hand. Arcs carry the name of the graph node
// they stand for; nodes are numbered in order of first appearance.

struct NamedArc {
  std::string label;
  std::string tail;
  std::string head;
};

Digraph digraph_from_named(const std::vector<NamedArc>& arcs);

// The two preimages of I. The first has b entering g and h entering f, the
// second g entering b and f entering h.
std::array<Digraph, 2> reference_preimages_I();

// Two preimages of Inv: the first keeps the orientation of each half as
// drawn for I and I', the second flips it. Labels follow build_Inv().
std::array<Digraph, 2> reference_preimages_Inv();

// Seven arcs on A..F whose intersection graph is a chordless 7-cycle
// a1,a2,a3,b,a4,a5,a6; b is the single chord of the cycle a1..a6.
Digraph reference_cycle_example();

// Partial preimages of the clause gadget: the 16 arcs r', r, a, f, a', f',
// b', e', b, e, s, t, s', t', c, d. Labels are clause-gadget names without
// the C<j>. prefix. Branch relations (r, s, t), "in" meaning x' enters x:
//   0: out in out   1: out out out   2: in in out   3: in out out
//   4: out in in
std::array<Digraph, 5> reference_clause_preimages();

}  // namespace flg
