// SPDX-License-Identifier: MIT
#include "flg/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "flg/error.hpp"
#include "flg/recognize.hpp"

namespace flg {

int Coloring::count() const {
  int m = -1;
  for (int c : colors) m = std::max(m, c);
  return m + 1;
}

bool is_proper(const UGraph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.node_count()) return false;
  for (int v = 0; v < g.node_count(); ++v) {
    if (c.colors[v] < 0) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) return false;
  }
  return true;
}

Coloring canonical(Coloring c) {
  std::vector<int> remap;
  for (int& x : c.colors) {
    if (x < 0) continue;
    if (x >= static_cast<int>(remap.size())) remap.resize(x + 1, -1);
    if (remap[x] < 0) remap[x] = static_cast<int>(std::count_if(remap.begin(), remap.end(), [](int r) { return r >= 0; }));
    x = remap[x];
  }
  return c;
}

namespace {

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Proper colouring of a graph whose components have at most one cycle:
// 2 colours, or 3 on a component whose cycle is odd.
std::vector<int> color_reduced(const UGraph& g) {
  const int n = g.node_count();
  std::vector<int> col(n, -1);
  std::vector<int> queue;
  auto bfs = [&](std::vector<int>& q) {
    for (size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      for (int w : g.neighbors(v)) {
        if (col[w] < 0) {
          col[w] = col[v] == 0 ? 1 : 0;
          q.push_back(w);
        }
      }
    }
  };
  std::vector<char> bad_component;
  auto [comp, count] = connected_components(g);
  bad_component.assign(count, 0);
  for (int s = 0; s < n; ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    queue.assign(1, s);
    bfs(queue);
    for (int v : queue) {
      for (int w : g.neighbors(v)) {
        if (col[v] == col[w]) bad_component[comp[v]] = 1;
      }
    }
  }
  if (std::none_of(bad_component.begin(), bad_component.end(), [](char b) { return b; })) return col;

  // Odd cycles: peel the trees off, colour the cycle 0,1,0,1,...,2 and let
  // the trees alternate outward from it.
  std::vector<int> deg(n);
  std::vector<char> on_cycle(n, 1);
  std::vector<int> peel;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) peel.push_back(v);
  }
  for (size_t i = 0; i < peel.size(); ++i) {
    int v = peel[i];
    on_cycle[v] = 0;
    for (int w : g.neighbors(v)) {
      if (on_cycle[w] && --deg[w] == 1) peel.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (bad_component[comp[v]]) col[v] = -1;
  }
  for (int s = 0; s < n; ++s) {
    if (!bad_component[comp[s]] || !on_cycle[s] || col[s] >= 0) continue;
    std::vector<int> cyc{s};
    int prev = -1, cur = s;
    while (true) {
      int next = -1;
      for (int w : g.neighbors(cur)) {
        if (on_cycle[w] && w != prev) {
          next = w;
          break;
        }
      }
      if (next == s || next < 0) break;
      cyc.push_back(next);
      prev = cur;
      cur = next;
    }
    for (size_t i = 0; i < cyc.size(); ++i) col[cyc[i]] = static_cast<int>(i % 2);
    col[cyc.back()] = 2;
    queue = cyc;
    bfs(queue);
  }
  return col;
}

}  // namespace

Coloring color_trianglefree_fl(const UGraph& g) {
  ReductionTrace tr = reduce_graph(g);
  for (const auto& p : cyclomatic_profile(tr.reduced_graph)) {
    if (p.cycles > 1) throw PreconditionError("not a facility location graph");
  }
  std::vector<int> col = color_reduced(tr.reduced_graph);

  std::unordered_set<std::uint64_t> absent;
  for (auto [u, v] : tr.removed_edges) absent.insert(edge_key(u, v));
  auto other = [&](int x, int skip) {
    for (int w : g.neighbors(x)) {
      if (w != skip) return absent.count(edge_key(x, w)) ? -1 : w;
    }
    return -1;
  };
  for (auto it = tr.removed_edges.rbegin(); it != tr.removed_edges.rend(); ++it) {
    auto [b, c] = *it;
    absent.erase(edge_key(b, c));
    if (col[b] != col[c]) continue;
    int b2 = other(b, c);
    int c2 = other(c, b);
    if (b2 >= 0 && c2 >= 0 && col[b2] != col[c2]) {
      // c2 differs from c, so b takes c2's colour.
      col[b] = col[c2];
    } else {
      // A third colour, avoiding c and b's other neighbour.
      int pick = 0;
      while (pick == col[c] || (b2 >= 0 && pick == col[b2])) ++pick;
      col[b] = pick;
    }
  }
  Coloring res = canonical(Coloring{col});
  if (!is_proper(g, res) || res.count() > 3) throw Error("internal: colouring is not proper");
  return res;
}

std::optional<Coloring> chromatic_brute(const UGraph& g, int k) {
  const int n = g.node_count();
  if (n == 0) return Coloring{};
  if (k <= 0) return std::nullopt;
  if (k > 64) k = 64;
  std::vector<int> col(n, -1);
  std::vector<std::uint64_t> seen(n, 0);  // colours present among neighbours
  long long budget_guard = 0;
  (void)budget_guard;

  auto rec = [&](auto&& self, int colored, int used) -> bool {
    if (colored == n) return true;
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (col[v] >= 0) continue;
      int sat = __builtin_popcountll(seen[v]);
      int deg = 0;
      for (int w : g.neighbors(v)) deg += col[w] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat >= k) return false;
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen[best] >> c & 1ULL) continue;
      col[best] = c;
      std::vector<int> touched;
      for (int w : g.neighbors(best)) {
        if (!(seen[w] >> c & 1ULL)) {
          seen[w] |= 1ULL << c;
          touched.push_back(w);
        }
      }
      // Fail fast if a neighbour lost its last colour.
      bool dead = false;
      for (int w : touched) {
        if (col[w] < 0 && __builtin_popcountll(seen[w]) >= k) dead = true;
      }
      if (!dead && self(self, colored + 1, std::max(used, c + 1))) return true;
      for (int w : touched) seen[w] &= ~(1ULL << c);
      col[best] = -1;
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return canonical(Coloring{col});
}

int chromatic_number(const UGraph& g) {
  for (int k = 0;; ++k) {
    if (chromatic_brute(g, k)) return k;
  }
}

bool edge_chromatic_brute(const UGraph& g, int k) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) return true;
  if (k <= 0) return false;
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > k) return false;
  }
  // Colour edges node by node so incident edges meet early.
  std::vector<int> order;
  {
    std::vector<char> taken(m, 0);
    std::vector<std::vector<int>> inc(g.node_count());
    for (int i = 0; i < m; ++i) {
      inc[edges[i].first].push_back(i);
      inc[edges[i].second].push_back(i);
    }
    for (int v = 0; v < g.node_count(); ++v) {
      for (int e : inc[v]) {
        if (!taken[e]) {
          taken[e] = 1;
          order.push_back(e);
        }
      }
    }
  }
  std::vector<std::uint64_t> used_at(g.node_count(), 0);
  auto rec = [&](auto&& self, int i, int used) -> bool {
    if (i == m) return true;
    auto [u, v] = edges[order[i]];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      std::uint64_t bit = 1ULL << c;
      if ((used_at[u] | used_at[v]) & bit) continue;
      used_at[u] |= bit;
      used_at[v] |= bit;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      used_at[u] &= ~bit;
      used_at[v] &= ~bit;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

EdgeColorReduction edgecolor_reduction(const UGraph& g, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  EdgeColorReduction r;
  r.digraph = Digraph(g.node_count());
  int i = 0;
  for (auto [u, v] : g.edges()) {
    ++i;
    const std::string e = "e" + std::to_string(i);
    int vi = r.digraph.add_node();
    int au = r.digraph.add_arc(u, vi, e + ".u");
    int av = r.digraph.add_arc(v, vi, e + ".v");
    r.edge_arcs.emplace_back(au, av);
    for (int p = 1; p < k; ++p) {
      r.digraph.add_arc(vi, r.digraph.add_node(), e + ".p" + std::to_string(p));
    }
  }
  return r;
}

}  // namespace flg
