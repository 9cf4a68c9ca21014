// SPDX-License-Identifier: MIT
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flg/graph.hpp"

namespace flg {

// Node x of the undirected graph is arc map[x] of the digraph.
struct ArcCertificate {
  std::vector<int> map;

  static ArcCertificate identity(int n);
  bool is_bijection(int arc_count) const;
  friend bool operator==(const ArcCertificate&, const ArcCertificate&) = default;
};

// Two arcs a=(u,v), b=(w,t) meet iff u=w, v=w, t=u, or they form an
// antiparallel pair (u=t and v=w). The last case is listed for clarity; it
// already implies v=w.
inline bool arcs_adjacent(const Arc& a, const Arc& b) {
  return a.tail == b.tail || a.head == b.tail || b.head == a.tail ||
         (a.tail == b.head && a.head == b.tail);
}

// I(D) with one node per arc, plus the identity certificate.
// Throws PreconditionError when d has no arcs.
std::pair<UGraph, ArcCertificate> intersection_graph(const Digraph& d);

// Same graph without the non-empty precondition. Runs in O(sum of local
// degree products), so it is linear when tails have bounded degree.
UGraph intersection_graph_unchecked(const Digraph& d);

// Does g equal I(d) under cert? Throws PreconditionError when cert is not a
// bijection between the nodes of g and the arcs of d.
bool check_certificate(const UGraph& g, const Digraph& d, const ArcCertificate& cert);

// Splits every sink with in-degree k >= 2 into k sinks. Arc order is kept,
// and new sink nodes are appended in arc order.
Digraph normalize_sinks(const Digraph& d);

bool check_fork_property(const Digraph& d);

enum class PatternName { T1, T2, T3, T4, F1, F2, F3, F4 };

struct ForbiddenPattern {
  PatternName name;
  Digraph templ;
};

std::string to_string(PatternName p);
PatternName pattern_from_string(const std::string& s);  // throws on unknown
const ForbiddenPattern& pattern(PatternName p);
std::vector<PatternName> all_patterns();
// T1..T4, F1, F2: the set kept out of the hard instances.
std::vector<PatternName> hardness_patterns();

struct PatternHit {
  PatternName name;
  std::vector<int> embedding;  // template node -> host node
};

// Non-induced subgraph embeddings with injective node maps, one per distinct
// image node set. Parallel template arcs need distinct host arcs.
std::vector<PatternHit> detect_patterns(const Digraph& d, const std::vector<PatternName>& names);

struct CyclePartition {
  std::vector<int> cycle_arcs;  // C', arc indices of d
  std::vector<int> chord_arcs;  // C''
  std::set<int> tails2;         // nodes that are the tail of two C' arcs
  std::set<int> heads2;         // nodes that are the head of two C' arcs
  std::set<int> mixed;          // one of each
};

// Splits the arcs behind a chordless cycle of I(d) into the cycle C' and the
// arcs C'' hanging off its double-head nodes. cycle_nodes lists nodes of I(d)
// in cycle order. Throws PreconditionError if they do not form a chordless
// cycle of length >= 4, and Error if no partition exists.
CyclePartition decompose_cycle_preimage(const Digraph& d, const ArcCertificate& cert,
                                        const std::vector<int>& cycle_nodes);

}  // namespace flg
