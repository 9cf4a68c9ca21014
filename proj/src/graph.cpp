// SPDX-License-Identifier: MIT
#include "flg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "flg/error.hpp"

namespace flg {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
      throw ParseError("bad rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Digraph::Digraph(int node_count) : n_(node_count) {
  if (node_count < 0) throw PreconditionError("negative node count");
}

int Digraph::add_node() { return n_++; }

int Digraph::add_arc(int tail, int head, std::string label) {
  if (tail < 0 || head < 0 || tail >= n_ || head >= n_) {
    throw PreconditionError("arc endpoint out of range");
  }
  if (tail == head) throw PreconditionError("self-loop at node " + std::to_string(tail));
  arcs_.push_back({tail, head});
  labels_.push_back(std::move(label));
  return arc_count() - 1;
}

bool Digraph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [](const std::string& s) { return !s.empty(); });
}

int Digraph::find_label(std::string_view label) const {
  for (int i = 0; i < arc_count(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> d(n_, 0);
  for (const Arc& a : arcs_) ++d[a.tail];
  return d;
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> d(n_, 0);
  for (const Arc& a : arcs_) ++d[a.head];
  return d;
}

UGraph::UGraph(int node_count) {
  if (node_count < 0) throw PreconditionError("negative node count");
  adj_.resize(node_count);
}

int UGraph::add_node() {
  adj_.emplace_back();
  if (!weights_.empty()) weights_.push_back(Rational(1));
  return node_count() - 1;
}

std::uint64_t UGraph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

bool UGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
    throw PreconditionError("edge endpoint out of range");
  }
  if (u == v) throw PreconditionError("self-loop at node " + std::to_string(u));
  if (!edge_set_.insert(key(u, v)).second) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return true;
}

bool UGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  return edge_set_.count(key(u, v)) != 0;
}

Rational UGraph::weight(int v) const {
  return weights_.empty() ? Rational(1) : weights_[v];
}

void UGraph::set_weight(int v, const Rational& w) {
  if (weights_.empty()) weights_.assign(node_count(), Rational(1));
  weights_[v] = w;
}

bool UGraph::same_as(const UGraph& other) const {
  if (node_count() != other.node_count() || edge_count() != other.edge_count()) return false;
  for (auto [u, v] : edges_) {
    if (!other.has_edge(u, v)) return false;
  }
  if (weighted() || other.weighted()) {
    for (int v = 0; v < node_count(); ++v) {
      if (weight(v) != other.weight(v)) return false;
    }
  }
  return true;
}

std::pair<std::vector<int>, int> connected_components(const UGraph& g) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  std::vector<int> stack;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

std::vector<ComponentProfile> cyclomatic_profile(const UGraph& g) {
  auto [comp, count] = connected_components(g);
  std::vector<ComponentProfile> out(count);
  for (int c = 0; c < count; ++c) out[c].id = c;
  for (int v = 0; v < g.node_count(); ++v) ++out[comp[v]].nodes;
  for (auto [u, v] : g.edges()) ++out[comp[u]].edges;
  for (auto& p : out) p.cycles = p.edges - p.nodes + 1;
  return out;
}

std::optional<std::array<int, 3>> find_triangle(const UGraph& g) {
  const int n = g.node_count();
  // Orient every edge toward the endpoint of higher (degree, id) rank, so each
  // node keeps at most sqrt(2m) out-neighbours.
  auto rank_less = [&](int u, int v) {
    return g.degree(u) != g.degree(v) ? g.degree(u) < g.degree(v) : u < v;
  };
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : g.edges()) {
    if (rank_less(u, v)) {
      out[u].push_back(v);
    } else {
      out[v].push_back(u);
    }
  }
  std::vector<int> mark(n, -1);
  for (int u = 0; u < n; ++u) {
    for (int v : out[u]) mark[v] = u;
    for (int v : out[u]) {
      for (int w : out[v]) {
        if (mark[w] == u) {
          std::array<int, 3> t{u, v, w};
          std::sort(t.begin(), t.end());
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

UGraph induced_subgraph(const UGraph& g, const std::vector<int>& nodes) {
  std::vector<int> pos(g.node_count(), -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) pos[nodes[i]] = i;
  UGraph h(static_cast<int>(nodes.size()));
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    for (int w : g.neighbors(nodes[i])) {
      if (pos[w] > i) h.add_edge(i, pos[w]);
    }
  }
  if (g.weighted()) {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) h.set_weight(i, g.weight(nodes[i]));
  }
  return h;
}

}  // namespace flg
