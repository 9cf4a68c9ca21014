// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flg/graph.hpp"
#include "flg/intersect.hpp"

namespace flg {

// Exhaustive preimage search. Every node x of g owns two endpoint variables,
// its tail and its head. A preimage is a partition of those variables; the
// search merges them along the adjacency cases and refuses merges that would
// make two non-adjacent nodes meet.
//
// With dedup on, a preimage is reported once per labelled isomorphism class.
// Sinks are normalized (one entering arc each): merging two sinks never
// changes I(D), so those variants are shown only with dedup off.

struct Preimage {
  Digraph digraph;
  ArcCertificate cert;
};

enum class SearchStatus { Complete, BudgetExhausted };

struct PreimageOptions {
  int node_budget = -1;                // digraph nodes; -1 means 2 |V(g)|
  bool dedup = true;
  std::int64_t step_limit = 200'000'000;  // search nodes per worker
  std::size_t max_results = 2'000'000;
  int jobs = 1;
  bool stop_at_first = false;
};

struct PreimageSet {
  std::vector<Preimage> members;  // sorted by endpoint partition
  bool canonical = true;          // true when dedup was on
  SearchStatus status = SearchStatus::Complete;
  std::int64_t steps = 0;
  std::size_t over_budget = 0;    // leaves dropped by the node budget
};

PreimageSet enumerate_preimages(const UGraph& g, const PreimageOptions& opt = {});

enum class Answer { Yes, No, Unknown };

struct PreimageDecision {
  Answer answer = Answer::Unknown;
  std::optional<Preimage> witness;
  std::int64_t steps = 0;
};

PreimageDecision has_preimage(const UGraph& g, std::int64_t step_limit = 200'000'000);

// Is there a node bijection taking arc cert1.map[x] of d1 to arc
// cert2.map[x] of d2 for every x? Linear: endpoints force the map.
bool labeled_digraph_iso(const Digraph& d1, const Digraph& d2, const ArcCertificate& cert1,
                         const ArcCertificate& cert2);

// Node permutations of g that keep its edges, identity first. Stops after
// `limit` of them. Plain backtracking, meant for gadget-sized graphs.
std::vector<std::vector<int>> automorphisms(const UGraph& g, std::size_t limit = 100'000);

// Classes of s.members up to isomorphism of the digraphs alone, which is
// labelled isomorphism up to an automorphism of g. Needs every automorphism
// within the default limit; throws Error otherwise.
std::size_t count_unlabeled_classes(const UGraph& g, const PreimageSet& s);

}  // namespace flg
