// SPDX-License-Identifier: MIT
#include "flg/optimize.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>

#include "flg/coloring.hpp"
#include "flg/error.hpp"
#include "flg/intersect.hpp"
#include "flg/io.hpp"

namespace flg {

bool is_stable(const UGraph& g, const std::vector<int>& nodes) {
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j] || g.has_edge(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

inline int low_bit(Mask m) { return __builtin_ctzll(m); }

// Branch and bound over bitsets with integer weights.
class StableSearch {
 public:
  StableSearch(std::vector<Mask> adj, std::vector<std::int64_t> w)
      : adj_(std::move(adj)), w_(std::move(w)) {}

  Mask solve(Mask candidates) {
    best_ = 0;
    best_set_ = 0;
    rec(candidates, 0, 0);
    return best_set_;
  }

 private:
  // Greedy clique cover; each clique contributes its heaviest node.
  std::int64_t bound(Mask p) const {
    std::int64_t sum = 0;
    while (p) {
      int v = low_bit(p);
      p &= p - 1;
      std::int64_t top = w_[v];
      Mask grow = adj_[v] & p;
      while (grow) {
        int u = low_bit(grow);
        top = std::max(top, w_[u]);
        p &= ~(Mask{1} << u);
        grow &= adj_[u] & ~(Mask{1} << u);
      }
      sum += top;
    }
    return sum;
  }

  void rec(Mask p, std::int64_t cur, Mask set) {
    if (!p) {
      if (cur > best_) {
        best_ = cur;
        best_set_ = set;
      }
      return;
    }
    if (cur + bound(p) <= best_) return;
    int v = low_bit(p);
    Mask bit = Mask{1} << v;
    rec(p & ~adj_[v] & ~bit, cur + w_[v], set | bit);
    rec(p & ~bit, cur, set);
  }

  std::vector<Mask> adj_;
  std::vector<std::int64_t> w_;
  std::int64_t best_ = 0;
  Mask best_set_ = 0;
};

}  // namespace

StableSet max_stable_set(const UGraph& g) {
  const int n = g.node_count();
  if (n > kMaxStableSetNodes) {
    throw PreconditionError("stable set search is limited to " + std::to_string(kMaxStableSetNodes) +
                            " nodes");
  }
  // Scale rational weights to integers by the lcm of the denominators.
  std::int64_t lcm = 1;
  for (int v = 0; v < n; ++v) lcm = std::lcm(lcm, g.weight(v).denominator());
  std::vector<std::int64_t> w(n);
  Mask candidates = 0;
  const std::int64_t limit = std::numeric_limits<std::int64_t>::max() / (n + 1);
  for (int v = 0; v < n; ++v) {
    Rational scaled = g.weight(v) * lcm;
    w[v] = scaled.numerator();
    if (w[v] > limit || w[v] < -limit) throw Error("weights too large for exact stable set search");
    if (w[v] > 0) candidates |= Mask{1} << v;
  }
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  Mask best = StableSearch(std::move(adj), w).solve(candidates);
  StableSet s;
  for (int v = 0; v < n; ++v) {
    if (best >> v & 1) {
      s.nodes.push_back(v);
      s.weight += g.weight(v);
    }
  }
  return s;
}

UflpInstance parse_uflp(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, graph_text;
  struct Cost {
    char kind;
    long long index;
    Rational value;
    int line;
  };
  std::vector<Cost> costs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "f" || tok == "k") {
      std::string idx, val, extra;
      if (!(ls >> idx >> val) || (ls >> extra)) {
        throw ParseError("expected '" + tok + " <index> <num>/<den>'", line_no);
      }
      long long i = 0;
      try {
        size_t used = 0;
        i = std::stoll(idx, &used);
        if (used != idx.size()) throw std::invalid_argument(idx);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + idx + "'", line_no);
      }
      Rational r;
      try {
        r = parse_rational(val);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      costs.push_back({tok[0], i, r, line_no});
      graph_text += "c\n";  // keeps line numbers aligned
    } else {
      graph_text += line + "\n";
    }
  }
  UflpInstance inst;
  inst.digraph = parse_digraph_text(graph_text);
  const int n = inst.digraph.node_count(), m = inst.digraph.arc_count();
  std::vector<char> have_f(n, 0), have_k(m, 0);
  inst.open_cost.assign(n, Rational(0));
  inst.assign_cost.assign(m, Rational(0));
  for (const Cost& c : costs) {
    const int count = c.kind == 'f' ? n : m;
    if (c.index < 1 || c.index > count) {
      throw ParseError(std::string(c.kind == 'f' ? "node" : "arc") + " index out of range", c.line);
    }
    auto& have = c.kind == 'f' ? have_f : have_k;
    if (have[c.index - 1]) throw ParseError("cost given twice", c.line);
    have[c.index - 1] = 1;
    (c.kind == 'f' ? inst.open_cost : inst.assign_cost)[c.index - 1] = c.value;
  }
  for (int v = 0; v < n; ++v) {
    if (!have_f[v]) throw ParseError("missing opening cost for node " + std::to_string(v + 1));
  }
  for (int a = 0; a < m; ++a) {
    if (!have_k[a]) throw ParseError("missing assignment cost for arc " + std::to_string(a + 1));
  }
  return inst;
}

std::string serialize(const UflpInstance& inst) {
  validate(inst);
  std::string s = serialize(inst.digraph);
  for (int v = 0; v < inst.digraph.node_count(); ++v) {
    s += "f " + std::to_string(v + 1) + " " + to_string(inst.open_cost[v]) + "\n";
  }
  for (int a = 0; a < inst.digraph.arc_count(); ++a) {
    s += "k " + std::to_string(a + 1) + " " + to_string(inst.assign_cost[a]) + "\n";
  }
  return s;
}

void validate(const UflpInstance& inst) {
  if (static_cast<int>(inst.open_cost.size()) != inst.digraph.node_count() ||
      static_cast<int>(inst.assign_cost.size()) != inst.digraph.arc_count()) {
    throw PreconditionError("cost arrays do not match the digraph");
  }
}

bool check_solution(const UflpInstance& inst, const UflpSolution& sol) {
  const int n = inst.digraph.node_count();
  if (static_cast<int>(sol.assignment.size()) != n) return false;
  std::vector<int> open;
  Rational cost(0);
  for (int v = 0; v < n; ++v) {
    int a = sol.assignment[v];
    if (a < 0) {
      open.push_back(v);
      cost += inst.open_cost[v];
      continue;
    }
    if (a >= inst.digraph.arc_count() || inst.digraph.arc(a).tail != v) return false;
    if (sol.assignment[inst.digraph.arc(a).head] >= 0) return false;
    cost += inst.assign_cost[a];
  }
  return open == sol.open && cost == sol.objective;
}

MwssInstance uflp_to_mwss(const UflpInstance& inst) {
  validate(inst);
  MwssInstance r;
  r.graph = intersection_graph_unchecked(inst.digraph);
  for (int a = 0; a < inst.digraph.arc_count(); ++a) {
    r.graph.set_weight(a, inst.open_cost[inst.digraph.arc(a).tail] - inst.assign_cost[a]);
  }
  for (const Rational& f : inst.open_cost) r.offset += f;
  return r;
}

UflpSolution uflp_brute(const UflpInstance& inst) {
  validate(inst);
  const int n = inst.digraph.node_count();
  if (n > 20) throw PreconditionError("brute-force UFLP is limited to 20 nodes");
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < inst.digraph.arc_count(); ++a) out[inst.digraph.arc(a).tail].push_back(a);

  bool found = false;
  UflpSolution best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    UflpSolution s;
    s.assignment.assign(n, -1);
    bool feasible = true;
    for (int v = 0; v < n && feasible; ++v) {
      if (mask >> v & 1) {
        s.open.push_back(v);
        s.objective += inst.open_cost[v];
        continue;
      }
      int pick = -1;
      for (int a : out[v]) {
        if (!(mask >> inst.digraph.arc(a).head & 1)) continue;
        if (pick < 0 || inst.assign_cost[a] < inst.assign_cost[pick]) pick = a;
      }
      if (pick < 0) {
        feasible = false;
      } else {
        s.assignment[v] = pick;
        s.objective += inst.assign_cost[pick];
      }
    }
    if (!feasible) continue;
    if (!found || s.objective < best.objective ||
        (s.objective == best.objective && s.open < best.open)) {
      best = std::move(s);
      found = true;
    }
  }
  if (!found) throw Error("internal: opening every node must be feasible");
  return best;
}

UflpSolution solve_uflp(const UflpInstance& inst) {
  MwssInstance w = uflp_to_mwss(inst);
  StableSet s = max_stable_set(w.graph);
  UflpSolution sol;
  const int n = inst.digraph.node_count();
  sol.assignment.assign(n, -1);
  for (int a : s.nodes) sol.assignment[inst.digraph.arc(a).tail] = a;
  for (int v = 0; v < n; ++v) {
    if (sol.assignment[v] < 0) sol.open.push_back(v);
  }
  sol.objective = w.offset - s.weight;
  if (!check_solution(inst, sol)) throw Error("internal: stable set does not give a valid solution");
  return sol;
}

StableSet approx_mwss_trianglefree(const UGraph& g) {
  Coloring c = color_trianglefree_fl(g);
  const int k = c.count();
  std::vector<StableSet> classes(k);
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.weight(v) > 0) {
      classes[c.colors[v]].nodes.push_back(v);
      classes[c.colors[v]].weight += g.weight(v);
    }
  }
  StableSet best;
  for (auto& s : classes) {
    if (s.weight > best.weight) best = s;
  }
  return best;
}

}  // namespace flg
