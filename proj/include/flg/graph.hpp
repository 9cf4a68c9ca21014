// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flg/rational.hpp"

namespace flg {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed multigraph. Parallel and antiparallel arcs are fine, loops are
// not. Arc indices are stable and double as node ids of I(D).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int node_count);

  int add_node();
  // Throws PreconditionError on a loop or an endpoint out of range.
  int add_arc(int tail, int head, std::string label = {});

  int node_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int i) const { return arcs_[i]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_labels() const;
  const std::string& label(int i) const { return labels_[i]; }
  void set_label(int i, std::string label) { labels_[i] = std::move(label); }
  // Index of the arc carrying `label`, or -1.
  int find_label(std::string_view label) const;

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
};

// Simple undirected graph with optional rational node weights.
class UGraph {
 public:
  explicit UGraph(int node_count = 0);

  int add_node();
  // Returns false if the edge already exists. Throws on a loop.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int node_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  // Each edge once, as (min, max), in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool weighted() const { return !weights_.empty(); }
  // 1 when no weights were set.
  Rational weight(int v) const;
  void set_weight(int v, const Rational& w);
  void clear_weights() { weights_.clear(); }

  // Same nodes, edges and weights, regardless of insertion order.
  bool same_as(const UGraph& other) const;

 private:
  static std::uint64_t key(int u, int v);

  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::vector<Rational> weights_;
};

struct ComponentProfile {
  int id = 0;
  int nodes = 0;
  int edges = 0;
  int cycles = 0;  // edges - nodes + 1
};

// Component id per node (ids in order of smallest member) and the count.
std::pair<std::vector<int>, int> connected_components(const UGraph& g);

std::vector<ComponentProfile> cyclomatic_profile(const UGraph& g);

// Some triangle, or nothing. Runs in O(m sqrt m) with degree ordering.
std::optional<std::array<int, 3>> find_triangle(const UGraph& g);

// Subgraph induced by `nodes`, relabelled in the given order.
UGraph induced_subgraph(const UGraph& g, const std::vector<int>& nodes);

}  // namespace flg
