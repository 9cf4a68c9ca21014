// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flg/graph.hpp"
#include "flg/intersect.hpp"

namespace flg {

struct Subdivision {
  UGraph graph;
  // Original edges sorted by (min, max). Edge i = (u, v), u < v, becomes the
  // path u - internal[i].first - internal[i].second - v.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> internal;
};

// Every edge becomes a path of three edges. Original nodes keep their ids;
// edge i gets nodes n + 2i and n + 2i + 1.
Subdivision poljak_subdivision(const UGraph& g);

// Throws PreconditionError unless every node has degree 3.
void require_cubic(const UGraph& g);
// Some bridge, or nothing. Iterative lowpoint DFS.
std::optional<std::pair<int, int>> find_bridge(const UGraph& g);

// A perfect matching of a bridgeless cubic graph, edges as (min, max) in
// increasing order. Exact backtracking. Throws PreconditionError when g is
// not cubic or has a bridge.
std::vector<std::pair<int, int>> perfect_matching_cubic(const UGraph& g);

struct HardInstance {
  Digraph digraph;
  ArcCertificate cert;  // node of subdivision.graph -> arc of digraph
  Subdivision subdivision;
  std::vector<std::pair<int, int>> matching;
};

// A preimage of the subdivision of a bridgeless cubic graph that avoids
// T1-T4, F1 and F2: the cycles left after removing a perfect matching become
// directed cycles, and each matching path u - e1 - e2 - v becomes two arcs
// with a common fresh tail entering the tails of u and v.
HardInstance cubic_to_hard_digraph(const UGraph& g);

}  // namespace flg
