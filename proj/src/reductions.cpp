// SPDX-License-Identifier: MIT
#include "flg/reductions.hpp"

#include <algorithm>
#include <map>

#include "flg/error.hpp"

namespace flg {

Subdivision poljak_subdivision(const UGraph& g) {
  Subdivision s;
  s.edges = g.edges();
  std::sort(s.edges.begin(), s.edges.end());
  const int n = g.node_count();
  s.graph = UGraph(n + 2 * static_cast<int>(s.edges.size()));
  for (size_t i = 0; i < s.edges.size(); ++i) {
    auto [u, v] = s.edges[i];
    int a = n + 2 * static_cast<int>(i), b = a + 1;
    s.internal.emplace_back(a, b);
    s.graph.add_edge(u, a);
    s.graph.add_edge(a, b);
    s.graph.add_edge(b, v);
  }
  if (g.weighted()) {
    for (int v = 0; v < n; ++v) s.graph.set_weight(v, g.weight(v));
  }
  return s;
}

void require_cubic(const UGraph& g) {
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) != 3) {
      throw PreconditionError("graph is not cubic: node " + std::to_string(v + 1) + " has degree " +
                              std::to_string(g.degree(v)));
    }
  }
}

std::optional<std::pair<int, int>> find_bridge(const UGraph& g) {
  const int n = g.node_count();
  std::vector<int> order(n, -1), low(n, 0), parent(n, -1);
  std::vector<size_t> it(n, 0);
  int clock = 0;
  for (int root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<int> stack{root};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] < g.neighbors(v).size()) {
        int w = g.neighbors(v)[it[v]++];
        if (order[w] < 0) {
          parent[w] = v;
          order[w] = low[w] = clock++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      stack.pop_back();
      int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (low[v] > order[p]) return std::make_pair(std::min(p, v), std::max(p, v));
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> perfect_matching_cubic(const UGraph& g) {
  require_cubic(g);
  if (auto b = find_bridge(g)) {
    throw PreconditionError("graph has the bridge " + std::to_string(b->first + 1) + "-" +
                            std::to_string(b->second + 1));
  }
  const int n = g.node_count();
  std::vector<int> mate(n, -1);
  auto rec = [&](auto&& self, int from) -> bool {
    int v = from;
    while (v < n && mate[v] >= 0) ++v;
    if (v == n) return true;
    std::vector<int> nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end());
    for (int w : nb) {
      if (mate[w] >= 0) continue;
      mate[v] = w;
      mate[w] = v;
      if (self(self, v + 1)) return true;
      mate[v] = mate[w] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) throw Error("internal: no perfect matching in a bridgeless cubic graph");
  std::vector<std::pair<int, int>> m;
  for (int v = 0; v < n; ++v) {
    if (v < mate[v]) m.emplace_back(v, mate[v]);
  }
  return m;
}

HardInstance cubic_to_hard_digraph(const UGraph& g) {
  HardInstance h;
  h.matching = perfect_matching_cubic(g);
  h.subdivision = poljak_subdivision(g);
  const Subdivision& s = h.subdivision;
  const int n = g.node_count();

  std::map<std::pair<int, int>, int> edge_index;
  for (size_t i = 0; i < s.edges.size(); ++i) edge_index[s.edges[i]] = static_cast<int>(i);
  std::vector<int> mate(n, -1);
  for (auto [u, v] : h.matching) {
    mate[u] = v;
    mate[v] = u;
  }
  // Internal node of edge uv next to u.
  auto near = [&](int u, int v) {
    int i = edge_index.at({std::min(u, v), std::max(u, v)});
    return u < v ? s.internal[i].first : s.internal[i].second;
  };

  h.cert.map.assign(s.graph.node_count(), -1);
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Walk the cycle of G - M through start.
    std::vector<int> cyc;
    int prev = -1, cur = start;
    do {
      seen[cur] = 1;
      cyc.push_back(cur);
      int next = -1;
      for (int w : g.neighbors(cur)) {
        if (w != mate[cur] && w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    } while (cur != start);
    std::vector<int> ring;
    for (size_t k = 0; k < cyc.size(); ++k) {
      int u = cyc[k], v = cyc[(k + 1) % cyc.size()];
      ring.push_back(u);
      ring.push_back(near(u, v));
      ring.push_back(near(v, u));
    }
    const int base = h.digraph.node_count();
    for (size_t k = 0; k < ring.size(); ++k) h.digraph.add_node();
    for (size_t k = 0; k < ring.size(); ++k) {
      int t = base + static_cast<int>(k);
      int hd = base + static_cast<int>((k + 1) % ring.size());
      h.cert.map[ring[k]] = h.digraph.add_arc(t, hd);
    }
  }
  for (auto [u, v] : h.matching) {
    int m = h.digraph.add_node();
    h.cert.map[near(u, v)] = h.digraph.add_arc(m, h.digraph.arc(h.cert.map[u]).tail);
    h.cert.map[near(v, u)] = h.digraph.add_arc(m, h.digraph.arc(h.cert.map[v]).tail);
  }
  // Arc order follows subdivision node order.
  Digraph ordered(h.digraph.node_count());
  for (int x = 0; x < s.graph.node_count(); ++x) {
    const Arc& a = h.digraph.arc(h.cert.map[x]);
    ordered.add_arc(a.tail, a.head);
  }
  h.digraph = std::move(ordered);
  h.cert = ArcCertificate::identity(s.graph.node_count());
  return h;
}

}  // namespace flg
