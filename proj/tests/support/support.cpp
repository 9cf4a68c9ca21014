// SPDX-License-Identifier: MIT
#include "support.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace flg::test {

Digraph random_digraph(Rng& rng, int nodes, int arcs) {
  Digraph d(nodes);
  if (nodes < 2) return d;
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  for (int i = 0; i < arcs; ++i) {
    int t = pick(rng), h = pick(rng);
    while (h == t) h = pick(rng);
    d.add_arc(t, h);
  }
  return d;
}

UGraph random_ugraph(Rng& rng, int nodes, double p) {
  UGraph g(nodes);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < nodes; ++u) {
    for (int v = u + 1; v < nodes; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

UGraph random_trianglefree(Rng& rng, int nodes, int edge_attempts) {
  UGraph g(nodes);
  if (nodes < 2) return g;
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  for (int i = 0; i < edge_attempts; ++i) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    bool closes = false;
    for (int w : g.neighbors(u)) {
      if (g.has_edge(w, v)) closes = true;
    }
    if (!closes) g.add_edge(u, v);
  }
  return g;
}

Digraph random_fl_trianglefree_digraph(Rng& rng, int arcs) {
  Digraph d(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int attempts = 0;
  while (d.arc_count() < arcs && attempts < 50 * arcs + 100) {
    ++attempts;
    std::uniform_int_distribution<int> pick(0, d.node_count() - 1);
    int t = unit(rng) < 0.15 ? d.node_count() : pick(rng);
    int h = unit(rng) < 0.3 ? d.node_count() + (t == d.node_count() ? 1 : 0) : pick(rng);
    if (t == h) continue;
    Digraph trial = d;
    while (trial.node_count() <= std::max(t, h)) trial.add_node();
    Arc a{t, h};
    // Reject when the new arc meets two arcs that meet each other.
    std::vector<int> nb;
    for (int i = 0; i < trial.arc_count(); ++i) {
      if (naive_adjacent(a, trial.arc(i))) nb.push_back(i);
    }
    bool triangle = false;
    for (size_t i = 0; i < nb.size() && !triangle; ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (naive_adjacent(trial.arc(nb[i]), trial.arc(nb[j]))) {
          triangle = true;
          break;
        }
      }
    }
    if (triangle) continue;
    trial.add_arc(t, h);
    d = std::move(trial);
  }
  return d;
}

UGraph random_fl_trianglefree(Rng& rng, int arcs) {
  Digraph d = random_fl_trianglefree_digraph(rng, arcs);
  UGraph g = naive_intersection_graph(d);
  return permute(g, random_permutation(rng, g.node_count()));
}

UGraph permute(const UGraph& g, const std::vector<int>& perm) {
  UGraph r(g.node_count());
  for (auto [u, v] : g.edges()) r.add_edge(perm[u], perm[v]);
  if (g.weighted()) {
    for (int v = 0; v < g.node_count(); ++v) r.set_weight(perm[v], g.weight(v));
  }
  return r;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Colour refinement, three rounds from degrees.
std::vector<std::uint64_t> wl_colors(const UGraph& g) {
  const int n = g.node_count();
  std::vector<std::uint64_t> c(n), next(n);
  for (int v = 0; v < n; ++v) c[v] = mix(g.degree(v));
  std::vector<std::uint64_t> nb;
  for (int round = 0; round < 3; ++round) {
    for (int v = 0; v < n; ++v) {
      nb.clear();
      for (int w : g.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = mix(c[v]);
      for (auto x : nb) h = mix(h ^ x);
      next[v] = h;
    }
    c.swap(next);
  }
  return c;
}

std::uint64_t wl_hash(const std::vector<std::uint64_t>& colors, int edges) {
  std::vector<std::uint64_t> s(colors);
  std::sort(s.begin(), s.end());
  std::uint64_t h = mix(s.size() * 1315423911ULL + edges);
  for (auto x : s) h = mix(h ^ x);
  return h;
}

bool isomorphic_with(const UGraph& a, const UGraph& b, const std::vector<std::uint64_t>& ca,
                     const std::vector<std::uint64_t>& cb) {
  const int n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Map a's nodes in BFS order so each one has mapped neighbours early.
  std::vector<int> order;
  std::vector<char> in(n, 0);
  for (int s = 0; s < n; ++s) {
    if (in[s]) continue;
    in[s] = 1;
    order.push_back(s);
    for (size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int w : a.neighbors(order[i])) {
        if (!in[w]) {
          in[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    int v = order[i];
    for (int w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v] || b.degree(w) != a.degree(v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int u = order[j];
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, i + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool isomorphic(const UGraph& a, const UGraph& b) {
  return isomorphic_with(a, b, wl_colors(a), wl_colors(b));
}

std::size_t for_each_graph(const GenerateOptions& opt, const std::function<void(const UGraph&)>& f) {
  std::size_t reported = 0;
  auto report = [&](const UGraph& g) {
    if (opt.connected_only && connected_components(g).second > 1) return;
    ++reported;
    f(g);
  };
  std::vector<UGraph> level{UGraph(1)};
  report(level[0]);
  for (int n = 2; n <= opt.max_nodes; ++n) {
    std::vector<UGraph> next;
    std::vector<std::vector<std::uint64_t>> next_colors;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (const UGraph& g : level) {
      const int k = n - 1;
      int min_deg = k;
      for (int v = 0; v < k; ++v) min_deg = std::min(min_deg, g.degree(v));
      for (std::uint32_t s = 0; s < (1u << k); ++s) {
        int deg = __builtin_popcount(s);
        if (g.edge_count() + deg > opt.max_edges) continue;
        // The new node must be a minimum degree node of the result.
        bool ok = true;
        for (int v = 0; v < k && ok; ++v) {
          if (g.degree(v) + static_cast<int>(s >> v & 1u) < deg) ok = false;
        }
        if (!ok) continue;
        if (opt.triangle_free) {
          for (int u = 0; u < k && ok; ++u) {
            if (!(s >> u & 1u)) continue;
            for (int w : g.neighbors(u)) {
              if (s >> w & 1u) ok = false;
            }
          }
          if (!ok) continue;
        }
        UGraph h = g;
        int v = h.add_node();
        for (int u = 0; u < k; ++u) {
          if (s >> u & 1u) h.add_edge(u, v);
        }
        auto colors = wl_colors(h);
        auto key = wl_hash(colors, h.edge_count());
        auto& bucket = buckets[key];
        bool dup = false;
        for (int idx : bucket) {
          if (isomorphic_with(next[idx], h, next_colors[idx], colors)) {
            dup = true;
            break;
          }
        }
        if (dup) continue;
        bucket.push_back(static_cast<int>(next.size()));
        next.push_back(std::move(h));
        next_colors.push_back(std::move(colors));
      }
    }
    for (const auto& g : next) report(g);
    level = std::move(next);
  }
  return reported;
}

bool naive_adjacent(const Arc& a, const Arc& b) {
  const int u = a.tail, v = a.head, w = b.tail, t = b.head;
  if (u == w) return true;             // common tail
  if (v == w) return true;             // a enters b
  if (t == u) return true;             // b enters a
  if (u == t && v == w) return true;   // antiparallel
  return false;
}

UGraph naive_intersection_graph(const Digraph& d) {
  UGraph g(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i) {
    for (int j = i + 1; j < d.arc_count(); ++j) {
      if (naive_adjacent(d.arc(i), d.arc(j))) g.add_edge(i, j);
    }
  }
  return g;
}

bool naive_has_triangle(const UGraph& g) {
  const int n = g.node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) return true;
      }
    }
  }
  return false;
}

int naive_stable_number(const UGraph& g) {
  return static_cast<int>(boost::rational_cast<long long>(naive_max_weight_stable([&] {
    UGraph h(g.node_count());
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
  }())));
}

Rational naive_max_weight_stable(const UGraph& g) {
  const int n = g.node_count();
  if (n > 24) throw std::runtime_error("naive stable set limited to 24 nodes");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  Rational best(0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool stable = true;
    Rational w(0);
    for (int v = 0; v < n && stable; ++v) {
      if (!(s >> v & 1u)) continue;
      if (adj[v] & s) stable = false;
      w += g.weight(v);
    }
    if (stable && w > best) best = w;
  }
  return best;
}

std::optional<std::vector<int>> naive_coloring(const UGraph& g, int k) {
  const int n = g.node_count();
  std::vector<int> col(n, -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && col[w] == c) ok = false;
      }
      if (!ok) continue;
      col[v] = c;
      if (self(self, v + 1)) return true;
    }
    col[v] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return col;
}

bool naive_edge_colorable(const UGraph& g, int k) {
  const auto& e = g.edges();
  UGraph line(static_cast<int>(e.size()));
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
          e[i].second == e[j].second) {
        line.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return naive_coloring(line, k).has_value();
}

std::vector<int> arc_shape(const Digraph& d, std::vector<int> arcs) {
  std::sort(arcs.begin(), arcs.end());
  std::vector<int> best;
  do {
    std::map<int, int> name;
    std::vector<int> code;
    for (int a : arcs) {
      for (int v : {d.arc(a).tail, d.arc(a).head}) {
        auto it = name.emplace(v, static_cast<int>(name.size())).first;
        code.push_back(it->second);
      }
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(arcs.begin(), arcs.end()));
  return best;
}

namespace {

std::vector<int> growth_string(const std::vector<int>& labels) {
  std::map<int, int> name;
  std::vector<int> out;
  for (int v : labels) out.push_back(name.emplace(v, static_cast<int>(name.size())).first->second);
  return out;
}

}  // namespace

std::vector<std::vector<int>> naive_preimage_partitions(const UGraph& g, bool normalize) {
  const int m = g.node_count();
  if (m > 6) throw std::runtime_error("naive preimage enumeration limited to 6 nodes");
  std::vector<int> rgs(2 * m, 0);
  std::set<std::vector<int>> found;
  auto visit = [&] {
    Digraph d(2 * m);
    for (int x = 0; x < m; ++x) {
      if (rgs[2 * x] == rgs[2 * x + 1]) return;
      d.add_arc(rgs[2 * x], rgs[2 * x + 1]);
    }
    if (!naive_intersection_graph(d).same_as(g)) return;
    if (!normalize) {
      found.insert(rgs);
      return;
    }
    Digraph n = normalize_sinks(d);
    std::vector<int> ends;
    for (const Arc& a : n.arcs()) {
      ends.push_back(a.tail);
      ends.push_back(a.head);
    }
    found.insert(growth_string(ends));
  };
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == 2 * m) {
      visit();
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (m == 0) return {{}};
  rec(rec, 0, 0);
  return {found.begin(), found.end()};
}

UGraph cycle_graph(int n) {
  UGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

UGraph path_graph(int n) {
  UGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

UGraph complete_graph(int n) {
  UGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

UGraph star_graph(int leaves) {
  UGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

UGraph petersen_graph() {
  UGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

UGraph prism_graph() {
  return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

UGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  UGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

UGraph double_cycle_with_leaves() {
  // Cycles 0-1-2-3 and 4-5-6-7, joined by 0-8-4; leaves 9..17.
  UGraph g(18);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(4 + i, 4 + (i + 1) % 4);
  }
  g.add_edge(0, 8);
  g.add_edge(8, 4);
  for (int v = 0; v < 9; ++v) g.add_edge(v, 9 + v);
  return g;
}

}  // namespace flg::test
