// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "flg/graph.hpp"
#include "flg/intersect.hpp"

namespace flg {

struct ReductionTrace {
  std::vector<std::pair<int, int>> removed_edges;  // in edge-list order
  UGraph reduced_graph;
};

// G': drop every edge whose endpoints both have
// degree 2 in g. Degrees are read once, so removal is simultaneous.
// Throws PreconditionError when g has a triangle.
ReductionTrace reduce_graph(const UGraph& g);

// Triangle-free FL test: every component of G' has at most one cycle.
bool is_fl_trianglefree(const UGraph& g);

// Ways to hang a new arc z off arc x so that z meets x and nothing else.
//   I    z = (h(x), new)   needs h(x) to be a sink (split off if shared)
//   II   z = (t(x), new)   needs t(x) touched by x alone
//   III  z = (new, t(x))   needs x to be the only arc leaving t(x)
// II implies III.
enum class ConnectionType { I, II, III };

struct Slots {
  bool I = false;
  bool II = false;
  bool III = false;
  bool any() const { return I || II || III; }
};

Slots available_slots(const Digraph& d, int arc);

// Preimage of a graph whose components have at most one cycle. Trees become
// in-trees (each child enters its parent's tail); a cycle becomes a directed
// cycle with its trees hanging into the cycle arcs' tails.
// Throws PreconditionError on a component with two or more cycles.
std::pair<Digraph, ArcCertificate> build_preimage_component(const UGraph& c);

// d is a preimage of H under cert, where b and c are non-adjacent, each has
// at most one neighbour in H, and those neighbours differ. Returns a preimage
// of H + bc. Throws PreconditionError when this does not hold.
std::pair<Digraph, ArcCertificate> reinsert_edge(const Digraph& d, const ArcCertificate& cert,
                                                 int b, int c);

struct RecognizeOptions {
#ifdef NDEBUG
  bool check_each_step = false;
#else
  bool check_each_step = true;
#endif
};

struct Recognition {
  bool accepted = false;
  Digraph digraph;                 // set when accepted
  ArcCertificate cert;             // set when accepted
  std::vector<int> component;      // refusal: nodes of the offending component
  int cycles = 0;                  // refusal: its independent cycle count
};

// Linear-time recognizer for triangle-free graphs.
// Throws PreconditionError when g has a triangle.
Recognition recognize(const UGraph& g, const RecognizeOptions& opt = {});

}  // namespace flg
