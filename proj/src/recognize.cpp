// SPDX-License-Identifier: MIT
#include "flg/recognize.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "flg/error.hpp"

namespace flg {
namespace {

void require_triangle_free(const UGraph& g) {
  if (auto t = find_triangle(g)) {
    throw PreconditionError("graph has a triangle {" + std::to_string((*t)[0] + 1) + "," +
                            std::to_string((*t)[1] + 1) + "," + std::to_string((*t)[2] + 1) + "}");
  }
}

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Mutable preimage with per-node degree counts, so every slot test and
// rewrite below is O(1).
class Builder {
 public:
  explicit Builder(int arcs) : arc_(arcs, Arc{-1, -1}) {}

  Builder(const Digraph& d, const ArcCertificate& cert) : arc_(cert.map.size()) {
    for (int v = 0; v < d.node_count(); ++v) new_node();
    for (size_t x = 0; x < cert.map.size(); ++x) {
      arc_[x] = Arc{-1, -1};
      set(static_cast<int>(x), d.arc(cert.map[x]).tail, d.arc(cert.map[x]).head);
    }
  }

  int new_node() {
    out_.push_back(0);
    in_.push_back(0);
    return static_cast<int>(out_.size()) - 1;
  }

  void set(int x, int t, int h) {
    if (arc_[x].tail >= 0) detach(x);
    arc_[x] = {t, h};
    ++out_[t];
    ++in_[h];
  }

  void detach(int x) {
    --out_[arc_[x].tail];
    --in_[arc_[x].head];
    arc_[x] = {-1, -1};
  }

  const Arc& arc(int x) const { return arc_[x]; }

  Slots slots(int x) const {
    const Arc& a = arc_[x];
    Slots s;
    s.I = out_[a.head] == 0;
    s.III = out_[a.tail] == 1;
    s.II = s.III && in_[a.tail] == 0;
    return s;
  }

  // Gives x a private sink head. Only valid when h(x) is a sink, so arcs
  // that shared the head merely lose a non-adjacency.
  void make_I(int x) {
    if (in_[arc_[x].head] > 1) set(x, arc_[x].tail, new_node());
  }

  // Places x so that it meets exactly y, via the first slot of y available.
  void hang(int x, int y) {
    Slots s = slots(y);
    if (s.III) {
      set(x, new_node(), arc_[y].tail);
    } else if (s.I) {
      make_I(y);
      set(x, arc_[y].head, new_node());
    } else {
      throw Error("internal: arc has no free connection");
    }
  }

  // Re-places b so it meets a (when a >= 0) and c. cs_other is the current
  // neighbour of c other than b, or -1.
  void reinsert(int b, int a, int c, int cs_other) {
    detach(b);
    if (a < 0) {
      if (!slots(c).any()) replace(c, cs_other);
      hang(b, c);
      return;
    }
    if (!join(b, a, c)) {
      replace(c, cs_other);
      if (!join(b, a, c)) throw Error("internal: no compatible connection types");
    }
  }

  Digraph to_digraph(ArcCertificate& cert) const {
    std::vector<int> id(out_.size(), -1);
    int n = 0;
    for (const Arc& a : arc_) {
      for (int v : {a.tail, a.head}) {
        if (id[v] < 0) id[v] = n++;
      }
    }
    Digraph d(n);
    for (const Arc& a : arc_) d.add_arc(id[a.tail], id[a.head]);
    cert = ArcCertificate::identity(static_cast<int>(arc_.size()));
    return d;
  }

 private:
  void replace(int c, int d) {
    detach(c);
    if (d < 0) {
      set(c, new_node(), new_node());
      return;
    }
    Slots s = slots(d);
    if (s.III) {
      set(c, new_node(), arc_[d].tail);
    } else if (s.I) {
      make_I(d);
      set(c, arc_[d].head, new_node());
    } else if (s.II) {
      set(c, arc_[d].tail, new_node());
    } else {
      throw Error("internal: neighbour has no free connection");
    }
  }

  // Compatible type pairs (a side, c side): (I,III) (III,I) (II,III) (III,II)
  // (I,I). The other four would force a and c to meet.
  bool join(int b, int a, int c) {
    Slots sa = slots(a), sc = slots(c);
    if (sa.I && sc.III) {
      make_I(a);
      set(b, arc_[a].head, arc_[c].tail);
    } else if (sa.III && sc.I) {
      make_I(c);
      set(b, arc_[c].head, arc_[a].tail);
    } else if (sa.II && sc.III) {
      set(b, arc_[a].tail, arc_[c].tail);
    } else if (sa.III && sc.II) {
      set(b, arc_[c].tail, arc_[a].tail);
    } else if (sa.I && sc.I) {
      make_I(a);
      make_I(c);
      set(c, arc_[c].tail, arc_[a].head);
      set(b, arc_[a].head, new_node());
    } else {
      return false;
    }
    return true;
  }

  std::vector<Arc> arc_;
  std::vector<int> out_, in_;
};

// Builds the in-tree or cycle-with-trees preimage of each component of g
// (all components must have at most one cycle).
void build_components(const UGraph& g, Builder& bld) {
  const int n = g.node_count();
  auto [comp, count] = connected_components(g);
  // Peel leaves; whatever survives lies on a cycle.
  std::vector<int> deg(n);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  std::vector<char> on_cycle(n, 1);
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    on_cycle[v] = 0;
    for (int w : g.neighbors(v)) {
      if (on_cycle[w] && --deg[w] == 1) queue.push_back(w);
    }
  }
  std::vector<char> done(n, 0);
  std::vector<int> bfs;
  auto grow_from = [&](std::vector<int>& frontier) {
    for (size_t i = 0; i < frontier.size(); ++i) {
      int p = frontier[i];
      for (int w : g.neighbors(p)) {
        if (done[w]) continue;
        done[w] = 1;
        bld.set(w, bld.new_node(), bld.arc(p).tail);
        frontier.push_back(w);
      }
    }
  };
  std::vector<char> comp_started(count, 0);
  // Components with a cycle start from it, so trees hang off the cycle.
  for (int pass = 0; pass < 2; ++pass) {
    for (int s = 0; s < n; ++s) {
      if (done[s] || comp_started[comp[s]]) continue;
      if (pass == 0 && !on_cycle[s]) continue;
      comp_started[comp[s]] = 1;
      bfs.clear();
      if (on_cycle[s]) {
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
        const int k = static_cast<int>(cyc.size());
        std::vector<int> node(k);
        for (int i = 0; i < k; ++i) node[i] = bld.new_node();
        for (int i = 0; i < k; ++i) {
          bld.set(cyc[i], node[i], node[(i + 1) % k]);
          done[cyc[i]] = 1;
          bfs.push_back(cyc[i]);
        }
      } else {
        bld.set(s, bld.new_node(), bld.new_node());
        done[s] = 1;
        bfs.push_back(s);
      }
      grow_from(bfs);
    }
  }
}

}  // namespace

ReductionTrace reduce_graph(const UGraph& g) {
  require_triangle_free(g);
  ReductionTrace tr;
  tr.reduced_graph = UGraph(g.node_count());
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) == 2 && g.degree(v) == 2) {
      tr.removed_edges.emplace_back(u, v);
    } else {
      tr.reduced_graph.add_edge(u, v);
    }
  }
  if (g.weighted()) {
    for (int v = 0; v < g.node_count(); ++v) tr.reduced_graph.set_weight(v, g.weight(v));
  }
  return tr;
}

bool is_fl_trianglefree(const UGraph& g) {
  auto tr = reduce_graph(g);
  for (const auto& p : cyclomatic_profile(tr.reduced_graph)) {
    if (p.cycles > 1) return false;
  }
  return true;
}

Slots available_slots(const Digraph& d, int arc) {
  ArcCertificate id = ArcCertificate::identity(d.arc_count());
  return Builder(d, id).slots(arc);
}

std::pair<Digraph, ArcCertificate> build_preimage_component(const UGraph& c) {
  for (const auto& p : cyclomatic_profile(c)) {
    if (p.cycles > 1) throw PreconditionError("component has " + std::to_string(p.cycles) + " cycles");
  }
  Builder bld(c.node_count());
  build_components(c, bld);
  ArcCertificate cert;
  Digraph d = bld.to_digraph(cert);
  return {std::move(d), std::move(cert)};
}

std::pair<Digraph, ArcCertificate> reinsert_edge(const Digraph& d, const ArcCertificate& cert,
                                                 int b, int c) {
  if (!cert.is_bijection(d.arc_count())) throw PreconditionError("certificate is not a bijection");
  const int m = d.arc_count();
  if (b < 0 || c < 0 || b >= m || c >= m || b == c) throw PreconditionError("bad node index");
  UGraph h = intersection_graph_unchecked(d);
  std::vector<int> node_of(m);
  for (int x = 0; x < m; ++x) node_of[cert.map[x]] = x;
  auto current_neighbour = [&](int x) {
    const auto& nb = h.neighbors(cert.map[x]);
    if (nb.size() > 1) throw PreconditionError("node " + std::to_string(x + 1) + " has degree > 1");
    return nb.empty() ? -1 : node_of[nb[0]];
  };
  if (h.has_edge(cert.map[b], cert.map[c])) throw PreconditionError("b and c are already adjacent");
  int a = current_neighbour(b);
  int dd = current_neighbour(c);
  if (a >= 0 && a == dd) throw PreconditionError("b and c have a common neighbour");
  Builder bld(d, cert);
  bld.reinsert(b, a, c, dd);
  ArcCertificate out_cert;
  Digraph out = bld.to_digraph(out_cert);
  return {std::move(out), std::move(out_cert)};
}

Recognition recognize(const UGraph& g, const RecognizeOptions& opt) {
  ReductionTrace tr = reduce_graph(g);
  Recognition res;
  auto [comp, count] = connected_components(tr.reduced_graph);
  for (const auto& p : cyclomatic_profile(tr.reduced_graph)) {
    if (p.cycles > 1) {
      for (int v = 0; v < g.node_count(); ++v) {
        if (comp[v] == p.id) res.component.push_back(v);
      }
      res.cycles = p.cycles;
      return res;
    }
  }
  Builder bld(g.node_count());
  build_components(tr.reduced_graph, bld);

  // Edges still missing from the partial preimage.
  std::unordered_set<std::uint64_t> absent;
  absent.reserve(tr.removed_edges.size() * 2 + 1);
  for (auto [u, v] : tr.removed_edges) absent.insert(edge_key(u, v));
  // Other neighbour of a degree-2 node x, if that edge is present.
  auto other = [&](int x, int skip) {
    for (int w : g.neighbors(x)) {
      if (w != skip) return absent.count(edge_key(x, w)) ? -1 : w;
    }
    return -1;
  };
  UGraph partial;
  if (opt.check_each_step) partial = tr.reduced_graph;
  for (auto it = tr.removed_edges.rbegin(); it != tr.removed_edges.rend(); ++it) {
    auto [b, c] = *it;
    int a = other(b, c);
    int d = other(c, b);
    absent.erase(edge_key(b, c));
    bld.reinsert(b, a, c, d);
    if (opt.check_each_step) {
      partial.add_edge(b, c);
      ArcCertificate step_cert;
      Digraph step = bld.to_digraph(step_cert);
      if (!check_certificate(partial, step, step_cert)) {
        throw Error("internal: reinsertion of edge " + std::to_string(b + 1) + "-" +
                    std::to_string(c + 1) + " broke the certificate");
      }
    }
  }
  res.digraph = bld.to_digraph(res.cert);
  if (!check_certificate(g, res.digraph, res.cert)) {
    throw Error("internal: recognizer produced an invalid certificate");
  }
  res.accepted = true;
  return res;
}

}  // namespace flg
