// SPDX-License-Identifier: MIT
#include "flg/intersect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "flg/error.hpp"

namespace flg {

ArcCertificate ArcCertificate::identity(int n) {
  ArcCertificate c;
  c.map.resize(n);
  std::iota(c.map.begin(), c.map.end(), 0);
  return c;
}

bool ArcCertificate::is_bijection(int arc_count) const {
  if (static_cast<int>(map.size()) != arc_count) return false;
  std::vector<char> seen(arc_count, 0);
  for (int a : map) {
    if (a < 0 || a >= arc_count || seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

namespace {

// Calls f(x, y) once or twice for every adjacent arc pair x != y.
template <class F>
void for_each_adjacent_pair(const Digraph& d, F&& f) {
  const int n = d.node_count();
  std::vector<std::vector<int>> out(n), in(n);
  for (int i = 0; i < d.arc_count(); ++i) {
    out[d.arc(i).tail].push_back(i);
    in[d.arc(i).head].push_back(i);
  }
  // Every adjacency has an arc x whose tail v is touched by the partner.
  for (int v = 0; v < n; ++v) {
    for (int x : out[v]) {
      for (int y : out[v]) {
        if (x < y) f(x, y);
      }
      for (int y : in[v]) {
        if (x != y) f(x, y);
      }
    }
  }
}

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

UGraph intersection_graph_unchecked(const Digraph& d) {
  UGraph g(d.arc_count());
  for_each_adjacent_pair(d, [&](int x, int y) { g.add_edge(x, y); });
  return g;
}

std::pair<UGraph, ArcCertificate> intersection_graph(const Digraph& d) {
  if (d.arc_count() == 0) throw PreconditionError("intersection graph of an empty arc set");
  return {intersection_graph_unchecked(d), ArcCertificate::identity(d.arc_count())};
}

bool check_certificate(const UGraph& g, const Digraph& d, const ArcCertificate& cert) {
  if (g.node_count() != d.arc_count() || !cert.is_bijection(d.arc_count())) {
    throw PreconditionError("certificate is not a bijection between nodes and arcs");
  }
  std::vector<int> node_of(d.arc_count());
  for (int x = 0; x < g.node_count(); ++x) node_of[cert.map[x]] = x;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<size_t>(g.edge_count()) * 2 + 16);
  bool ok = true;
  for_each_adjacent_pair(d, [&](int x, int y) {
    if (!ok) return;
    int u = node_of[x];
    int v = node_of[y];
    if (!g.has_edge(u, v)) {
      ok = false;
      return;
    }
    seen.insert(pair_key(u, v));
  });
  return ok && static_cast<int>(seen.size()) == g.edge_count();
}

Digraph normalize_sinks(const Digraph& d) {
  const auto outdeg = d.out_degrees();
  Digraph r(d.node_count());
  std::vector<char> used(d.node_count(), 0);
  for (int i = 0; i < d.arc_count(); ++i) {
    Arc a = d.arc(i);
    if (outdeg[a.head] == 0) {
      if (used[a.head]) a.head = r.add_node();
      else used[a.head] = 1;
    }
    r.add_arc(a.tail, a.head, d.label(i));
  }
  return r;
}

bool check_fork_property(const Digraph& d) {
  const auto outdeg = d.out_degrees();
  std::vector<std::vector<int>> succ(d.node_count());
  for (const Arc& a : d.arcs()) succ[a.tail].push_back(a.head);
  for (int v = 0; v < d.node_count(); ++v) {
    if (outdeg[v] >= 3) return false;
    if (outdeg[v] == 2) {
      for (int w : succ[v]) {
        if (outdeg[w] != 0) return false;
      }
    }
  }
  return true;
}

std::string to_string(PatternName p) {
  static const char* names[] = {"T1", "T2", "T3", "T4", "F1", "F2", "F3", "F4"};
  return names[static_cast<int>(p)];
}

PatternName pattern_from_string(const std::string& s) {
  for (PatternName p : all_patterns()) {
    if (to_string(p) == s) return p;
  }
  throw PreconditionError("unknown pattern '" + s + "'");
}

std::vector<PatternName> all_patterns() {
  return {PatternName::T1, PatternName::T2, PatternName::T3, PatternName::T4,
          PatternName::F1, PatternName::F2, PatternName::F3, PatternName::F4};
}

std::vector<PatternName> hardness_patterns() {
  return {PatternName::T1, PatternName::T2, PatternName::T3,
          PatternName::T4, PatternName::F1, PatternName::F2};
}

namespace {

Digraph make_template(int n, std::initializer_list<Arc> arcs) {
  Digraph d(n);
  for (const Arc& a : arcs) d.add_arc(a.tail, a.head);
  return d;
}

std::vector<ForbiddenPattern> build_templates() {
  // Node numbering follows the letters a, b, c, ... in the comments.
  return {
      // T1: a->b, a->c, a->d
      {PatternName::T1, make_template(4, {{0, 1}, {0, 2}, {0, 3}})},
      // T2 on e,f,g,h: f->e, e->h, e->g
      {PatternName::T2, make_template(4, {{1, 0}, {0, 3}, {0, 2}})},
      // T3 on i,j,k: i->j, j->k, k->i
      {PatternName::T3, make_template(3, {{0, 1}, {1, 2}, {2, 0}})},
      // T4 on o,p,q: o->p, p->o, o->q
      {PatternName::T4, make_template(3, {{0, 1}, {1, 0}, {0, 2}})},
      // F1 on a,b,c,d,e: b->a, c->a, d->a, a->e
      {PatternName::F1, make_template(5, {{1, 0}, {2, 0}, {3, 0}, {0, 4}})},
      // F2 on a,c,d,e: c->a, d->a, a->e, e->a
      {PatternName::F2, make_template(4, {{1, 0}, {2, 0}, {0, 3}, {3, 0}})},
      // F3 on a,c,d,u: c->a, d->a, a->u
      {PatternName::F3, make_template(4, {{1, 0}, {2, 0}, {0, 3}})},
      // F4 on a,c,d,u,f: c->a, d->a, a->u, u->f
      {PatternName::F4, make_template(5, {{1, 0}, {2, 0}, {0, 3}, {3, 4}})},
  };
}

}  // namespace

const ForbiddenPattern& pattern(PatternName p) {
  static const std::vector<ForbiddenPattern> templates = build_templates();
  return templates[static_cast<int>(p)];
}

std::vector<PatternHit> detect_patterns(const Digraph& d, const std::vector<PatternName>& names) {
  // Arc multiplicities of the host, keyed by (tail, head).
  std::map<std::pair<int, int>, int> mult;
  for (const Arc& a : d.arcs()) ++mult[{a.tail, a.head}];
  std::vector<std::vector<int>> nbrs(d.node_count());
  for (const Arc& a : d.arcs()) {
    nbrs[a.tail].push_back(a.head);
    nbrs[a.head].push_back(a.tail);
  }
  for (auto& v : nbrs) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<PatternHit> hits;
  for (PatternName name : names) {
    const Digraph& t = pattern(name).templ;
    const int k = t.node_count();
    std::map<std::pair<int, int>, int> need;
    for (const Arc& a : t.arcs()) ++need[{a.tail, a.head}];
    std::vector<std::vector<int>> tnbrs(k);
    for (const Arc& a : t.arcs()) {
      tnbrs[a.tail].push_back(a.head);
      tnbrs[a.head].push_back(a.tail);
    }
    // Visit template nodes so each one after the first touches an earlier one.
    std::vector<int> order{0};
    std::vector<char> placed(k, 0);
    placed[0] = 1;
    while (static_cast<int>(order.size()) < k) {
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        bool touches = std::any_of(tnbrs[v].begin(), tnbrs[v].end(), [&](int w) { return placed[w]; });
        if (touches) {
          order.push_back(v);
          placed[v] = 1;
          break;
        }
      }
    }
    std::vector<int> emb(k, -1);
    std::vector<char> used(d.node_count(), 0);
    std::set<std::vector<int>> images;

    auto consistent = [&](int tv) {
      for (const auto& [arc, count] : need) {
        auto [a, b] = arc;
        if (a != tv && b != tv) continue;
        if (emb[a] < 0 || emb[b] < 0) continue;
        auto it = mult.find({emb[a], emb[b]});
        if (it == mult.end() || it->second < count) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == k) {
        std::vector<int> img(emb);
        std::sort(img.begin(), img.end());
        if (images.insert(img).second) hits.push_back({name, emb});
        return;
      }
      int tv = order[depth];
      std::vector<int> candidates;
      if (depth == 0) {
        candidates.resize(d.node_count());
        std::iota(candidates.begin(), candidates.end(), 0);
      } else {
        int anchor = -1;
        for (int w : tnbrs[tv]) {
          if (emb[w] >= 0) {
            anchor = emb[w];
            break;
          }
        }
        candidates = nbrs[anchor];
      }
      for (int hv : candidates) {
        if (used[hv]) continue;
        emb[tv] = hv;
        used[hv] = 1;
        if (consistent(tv)) self(self, depth + 1);
        used[hv] = 0;
        emb[tv] = -1;
      }
    };
    rec(rec, 0);
  }
  return hits;
}

namespace {

struct PartitionCheck {
  bool ok = false;
  CyclePartition part;
};

PartitionCheck try_partition(const Digraph& d, const std::vector<int>& arcs,
                             const std::vector<char>& is_chord) {
  PartitionCheck res;
  std::vector<int> cyc, chords;
  for (size_t i = 0; i < arcs.size(); ++i) (is_chord[i] ? chords : cyc).push_back(arcs[i]);
  if (cyc.size() < 2) return res;
  std::map<int, int> indeg, outdeg;
  std::map<int, std::vector<int>> touching;
  for (int a : cyc) {
    ++outdeg[d.arc(a).tail];
    ++indeg[d.arc(a).head];
    touching[d.arc(a).tail].push_back(a);
    touching[d.arc(a).head].push_back(a);
  }
  for (const auto& [v, list] : touching) {
    if (list.size() != 2) return res;
  }
  // Connected as one cycle: walk it.
  {
    std::set<int> seen_arcs;
    int start = cyc.front();
    int cur = start;
    int at = d.arc(start).head;
    do {
      seen_arcs.insert(cur);
      const auto& list = touching[at];
      int next = list[0] == cur ? list[1] : list[0];
      if (list[0] == list[1]) next = list[0];
      const Arc& na = d.arc(next);
      at = na.tail == at ? na.head : na.tail;
      cur = next;
    } while (cur != start);
    if (seen_arcs.size() != cyc.size()) return res;
  }
  CyclePartition& p = res.part;
  p.cycle_arcs = cyc;
  p.chord_arcs = chords;
  for (const auto& [v, list] : touching) {
    if (outdeg[v] == 2) p.tails2.insert(v);
    else if (indeg[v] == 2) p.heads2.insert(v);
    else p.mixed.insert(v);
  }
  if (chords.size() != p.heads2.size()) return res;
  std::set<int> covered;
  for (int c : chords) {
    int v = d.arc(c).tail;
    int vbar = d.arc(c).head;
    if (!p.heads2.count(v) || !covered.insert(v).second) return res;
    if (touching.count(vbar)) {
      if (!p.mixed.count(vbar)) return res;
      bool neighbour = false;
      for (int a : touching[v]) {
        if (d.arc(a).tail == vbar || d.arc(a).head == vbar) neighbour = true;
      }
      if (!neighbour) return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace

CyclePartition decompose_cycle_preimage(const Digraph& d, const ArcCertificate& cert,
                                        const std::vector<int>& cycle_nodes) {
  const int k = static_cast<int>(cycle_nodes.size());
  if (k < 4) throw PreconditionError("cycle must have at least four nodes");
  std::vector<int> arcs(k);
  for (int i = 0; i < k; ++i) {
    int x = cycle_nodes[i];
    if (x < 0 || x >= static_cast<int>(cert.map.size())) throw PreconditionError("node out of range");
    arcs[i] = cert.map[x];
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (arcs_adjacent(d.arc(arcs[i]), d.arc(arcs[j])) != consecutive) {
        throw PreconditionError("nodes do not form a chordless cycle of I(D)");
      }
    }
  }
  // A chord (v, w) has both cycle neighbours entering v. Such arcs without an
  // antiparallel neighbour are forced; antiparallel pairs are a choice.
  auto enters = [&](int y, int v) { return d.arc(y).head == v; };
  std::vector<char> candidate(k, 0);
  for (int i = 0; i < k; ++i) {
    int v = d.arc(arcs[i]).tail;
    candidate[i] = enters(arcs[(i + k - 1) % k], v) && enters(arcs[(i + 1) % k], v);
  }
  auto antiparallel = [&](int i, int j) {
    return d.arc(arcs[i]).tail == d.arc(arcs[j]).head && d.arc(arcs[i]).head == d.arc(arcs[j]).tail;
  };
  std::vector<char> forced(k, 0);
  std::vector<int> optional;
  for (int i = 0; i < k; ++i) {
    if (!candidate[i]) continue;
    int prev = (i + k - 1) % k, next = (i + 1) % k;
    bool ambiguous = (candidate[prev] && antiparallel(i, prev)) || (candidate[next] && antiparallel(i, next));
    if (ambiguous) optional.push_back(i);
    else forced[i] = 1;
  }
  if (optional.size() > 20) throw Error("too many ambiguous chords in cycle preimage");
  // Scan subsets by size, and within a size prefer later cycle positions.
  std::vector<unsigned> masks(1u << optional.size());
  std::iota(masks.begin(), masks.end(), 0u);
  const int q = static_cast<int>(optional.size());
  auto later_first_key = [&](unsigned m) {
    unsigned r = 0;
    for (int b = 0; b < q; ++b) {
      if (m >> b & 1u) r |= 1u << (q - 1 - b);
    }
    return r;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return later_first_key(a) < later_first_key(b);
  });
  for (unsigned m : masks) {
    std::vector<char> chord(forced);
    for (int b = 0; b < q; ++b) {
      if (m >> b & 1u) chord[optional[b]] = 1;
    }
    auto r = try_partition(d, arcs, chord);
    if (r.ok) return r.part;
  }
  throw Error("no cycle partition exists; the certificate is inconsistent");
}

}  // namespace flg
