// SPDX-License-Identifier: MIT
// Generators and brute-force oracles shared by the tests. The oracles avoid
// the library's algorithms on purpose.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "flg/graph.hpp"
#include "flg/intersect.hpp"

namespace flg::test {

using Rng = std::mt19937_64;

// Arcs with endpoints drawn from n nodes, no loops.
Digraph random_digraph(Rng& rng, int nodes, int arcs);

// Each edge present with probability p.
UGraph random_ugraph(Rng& rng, int nodes, double p);

// Random triangle-free graph, by adding random edges that close no triangle.
UGraph random_trianglefree(Rng& rng, int nodes, int edge_attempts);

// A digraph whose intersection graph is triangle-free: out-degree at most
// one except for forks into fresh sinks, no directed triangle. `arcs` is a
// target, the result may have slightly fewer.
Digraph random_fl_trianglefree_digraph(Rng& rng, int arcs);

// I(D) of such a digraph with its nodes shuffled.
UGraph random_fl_trianglefree(Rng& rng, int arcs);

// g with node v renamed perm[v].
UGraph permute(const UGraph& g, const std::vector<int>& perm);
std::vector<int> random_permutation(Rng& rng, int n);

// One representative per isomorphism class of graphs with at most
// max_nodes nodes (at least 1) and at most max_edges edges, optionally
// triangle-free. Calls f on each, in order of node count.
struct GenerateOptions {
  int max_nodes = 6;
  int max_edges = 1 << 20;
  bool triangle_free = false;
  bool connected_only = false;  // filter applied to the reported graphs only
};
std::size_t for_each_graph(const GenerateOptions& opt, const std::function<void(const UGraph&)>& f);

// Exact isomorphism test for small graphs.
bool isomorphic(const UGraph& a, const UGraph& b);

// Oracles.
bool naive_adjacent(const Arc& a, const Arc& b);  // the four cases, spelled out
UGraph naive_intersection_graph(const Digraph& d);
bool naive_has_triangle(const UGraph& g);
int naive_stable_number(const UGraph& g);            // subset enumeration
Rational naive_max_weight_stable(const UGraph& g);   // subset enumeration
std::optional<std::vector<int>> naive_coloring(const UGraph& g, int k);  // plain backtracking
bool naive_edge_colorable(const UGraph& g, int k);   // via the line graph

// Canonical form of the sub-digraph made of `arcs`, up to renaming nodes
// and reordering arcs. Tries every arc order, so keep `arcs` short.
std::vector<int> arc_shape(const Digraph& d, std::vector<int> arcs);

// Every digraph D with I(D) = g under the identity certificate, as
// restricted growth strings over the endpoints t(0), h(0), t(1), ... .
// With normalize set, sinks are split first and duplicates dropped.
// Exponential; meant for up to five nodes.
std::vector<std::vector<int>> naive_preimage_partitions(const UGraph& g, bool normalize);

// Graph builders.
UGraph cycle_graph(int n);
UGraph path_graph(int n);
UGraph complete_graph(int n);
UGraph star_graph(int leaves);
UGraph petersen_graph();
UGraph prism_graph();  // C3 x K2
UGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Two 4-cycles joined by a two-edge path, every node with a pendant leaf.
// Not an FL graph: G' keeps both cycles in one component.
UGraph double_cycle_with_leaves();

}  // namespace flg::test
