// SPDX-License-Identifier: MIT
#include "flg/preimage.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

#include "flg/error.hpp"

namespace flg {

namespace {

constexpr int kMaxSearchNodes = 6000;

inline int tail_var(int x) { return 2 * x; }
inline int head_var(int x) { return 2 * x + 1; }

using Partition = std::vector<int>;  // class label per endpoint variable

class Search {
 public:
  Search(const UGraph& g, const PreimageOptions& opt, int worker, int split_depth,
         std::atomic<bool>& stop)
      : g_(g), opt_(opt), n_(g.node_count()), vars_(2 * n_), worker_(worker),
        split_depth_(split_depth), stop_(stop) {
    adj_.assign(static_cast<size_t>(n_) * n_, 0);
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<size_t>(u) * n_ + v] = 1;
      adj_[static_cast<size_t>(v) * n_ + u] = 1;
      // (T_u,T_v), (H_u,T_v), (H_v,T_u): shared tail, u enters v, v enters u.
      lits_.push_back({{{tail_var(u), tail_var(v)},
                        {head_var(u), tail_var(v)},
                        {head_var(v), tail_var(u)}}});
    }
    weight_.assign(lits_.size(), 1);
    queued_.assign(lits_.size(), 0);
    incident_.resize(n_);
    diseq_.resize(vars_);
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
      incident_[g.edges()[i].first].push_back(i);
      incident_[g.edges()[i].second].push_back(i);
    }
    parent_.resize(vars_);
    size_.assign(vars_, 1);
    next_.resize(vars_);
    for (int i = 0; i < vars_; ++i) parent_[i] = next_[i] = i;
  }

  void run() {
    for (int i = 0; i < static_cast<int>(lits_.size()); ++i) {
      queued_[i] = 1;
      queue_.push_back(i);
    }
    descend(0);
  }

  std::vector<Partition> results;
  std::int64_t steps = 0;
  std::size_t over_budget = 0;
  bool exhausted = false;

 private:
  enum State { EQ, NEQ, OPEN };
  using Lit = std::pair<int, int>;

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool adjacent(int x, int y) const { return adj_[static_cast<size_t>(x) * n_ + y]; }

  // Endpoint variables p and q may not share a node.
  bool clash(int p, int q) const {
    int x = p >> 1, y = q >> 1;
    if (x == y) return true;  // tail and head of one arc
    bool has_tail = !(p & 1) || !(q & 1);
    return has_tail && !adjacent(x, y);
  }

  bool can_merge(int ra, int rb) const {
    int p = ra;
    do {
      int q = rb;
      do {
        if (clash(p, q)) return false;
        q = next_[q];
      } while (q != rb);
      for (int o : diseq_[p]) {
        if (find(o) == rb) return false;
      }
      p = next_[p];
    } while (p != ra);
    return true;
  }

  State state(const Lit& l) const {
    int ra = find(l.first), rb = find(l.second);
    if (ra == rb) return EQ;
    return can_merge(ra, rb) ? OPEN : NEQ;
  }

  void unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    std::swap(next_[ra], next_[rb]);
    trail_.push_back(rb);
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      int rb = trail_.back();
      trail_.pop_back();
      int ra = parent_[rb];
      std::swap(next_[ra], next_[rb]);
      size_[ra] -= size_[rb];
      parent_[rb] = rb;
    }
  }

  // Queues every edge touching a member of the class rooted at r.
  void touch_class(int r) {
    int v = r;
    do {
      for (int e : incident_[v >> 1]) {
        if (!queued_[e]) {
          queued_[e] = 1;
          queue_.push_back(e);
        }
      }
      v = next_[v];
    } while (v != r);
  }

  void clear_queue() {
    for (int e : queue_) queued_[e] = 0;
    queue_.clear();
  }

  // Unit propagation over the queued edge disjunctions. False on a dead edge.
  bool propagate() {
    while (!queue_.empty()) {
      int i = queue_.back();
      queue_.pop_back();
      queued_[i] = 0;
      int open = 0;
      const Lit* last = nullptr;
      bool sat = false;
      for (const Lit& l : lits_[i]) {
        State s = state(l);
        if (s == EQ) {
          sat = true;
          break;
        }
        if (s == OPEN) {
          ++open;
          last = &l;
        }
      }
      if (sat) continue;
      if (open == 0) {
        ++weight_[i];
        clear_queue();
        return false;
      }
      if (open == 1) {
        unite(last->first, last->second);
        touch_class(find(last->first));
      }
    }
    return true;
  }

  // The literal to branch on: an unsatisfied edge with the fewest open
  // literals per recorded conflict, else any open literal left. Nothing means
  // a leaf. Conflict weights steer the search back to gadgets that failed,
  // instead of retrying unrelated choices made earlier.
  // Conflict weights differ between workers, so the levels shared by all
  // workers branch on the unweighted rule.
  std::optional<Lit> choose(int depth) const {
    const bool weighted = split_depth_ < 0 || depth > split_depth_;
    const Lit* best = nullptr;
    int best_open = 4;
    std::int64_t best_weight = 1;
    const Lit* any_open = nullptr;
    for (size_t i = 0; i < lits_.size(); ++i) {
      const auto& e = lits_[i];
      int open = 0;
      const Lit* first = nullptr;
      bool sat = false;
      for (const Lit& l : e) {
        State s = state(l);
        if (s == EQ) sat = true;
        if (s == OPEN) {
          ++open;
          if (!first) first = &l;
        }
      }
      const std::int64_t w = weighted ? weight_[i] : 1;
      if (!sat && open * best_weight < best_open * w) {
        best_open = open;
        best_weight = w;
        best = first;
      }
      if (!any_open && first) any_open = first;
    }
    if (best) return *best;
    if (any_open) return *any_open;
    return std::nullopt;
  }

  void leaf(int depth) {
    // A leaf above the split depth is reached by every worker; worker 0 owns it.
    if (split_depth_ >= 0 && depth <= split_depth_ && worker_ != 0) return;
    Partition p(vars_, -1);
    std::vector<int> label_of(vars_, -1);
    int next_label = 0;
    for (int v = 0; v < vars_; ++v) {
      int r = find(v);
      if (label_of[r] < 0) label_of[r] = next_label++;
      p[v] = label_of[r];
    }
    int budget = opt_.node_budget < 0 ? 2 * n_ : opt_.node_budget;
    if (next_label > budget) {
      ++over_budget;
      return;
    }
    results.push_back(std::move(p));
    if (opt_.stop_at_first || results.size() >= opt_.max_results) {
      if (!opt_.stop_at_first) exhausted = true;
      stop_ = true;
    }
  }

  void descend(int depth) {
    if (stop_ || ++steps > opt_.step_limit) {
      if (!stop_) exhausted = true;
      stop_ = true;
      clear_queue();
      return;
    }
    const size_t mark = trail_.size();
    if (propagate()) {
      std::optional<Lit> lit = choose(depth);
      if (!lit) {
        leaf(depth);
      } else {
        // Subtrees at the split depth are dealt round-robin to the workers.
        bool mine = depth != split_depth_ || (branch_counter_++ % opt_.jobs) == worker_;
        if (mine) {
          const size_t mark2 = trail_.size();
          unite(lit->first, lit->second);
          touch_class(find(lit->first));
          descend(depth + 1);
          undo_to(mark2);
          diseq_[lit->first].push_back(lit->second);
          diseq_[lit->second].push_back(lit->first);
          touch_class(find(lit->first));
          descend(depth + 1);
          diseq_[lit->first].pop_back();
          diseq_[lit->second].pop_back();
        }
      }
    }
    undo_to(mark);
  }

  const UGraph& g_;
  const PreimageOptions& opt_;
  const int n_;
  const int vars_;
  const int worker_;
  const int split_depth_;
  std::atomic<bool>& stop_;
  std::vector<char> adj_;
  std::vector<std::array<Lit, 3>> lits_;
  std::vector<std::int64_t> weight_;
  std::vector<int> parent_, size_, next_;
  std::vector<int> trail_;
  std::vector<std::vector<int>> diseq_;  // per variable, pushed and popped
  std::vector<std::vector<int>> incident_;  // edges per node of g
  std::vector<int> queue_;
  std::vector<char> queued_;
  std::int64_t branch_counter_ = 0;
};

Preimage to_preimage(const Partition& p) {
  int nodes = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
  Digraph d(nodes);
  const int n = static_cast<int>(p.size()) / 2;
  for (int x = 0; x < n; ++x) d.add_arc(p[tail_var(x)], p[head_var(x)]);
  return {std::move(d), ArcCertificate::identity(n)};
}

Partition relabel(const Partition& p) {
  Partition r(p.size());
  std::vector<int> map(p.size() + 1, -1);
  int next = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (map[p[i]] < 0) map[p[i]] = next++;
    r[i] = map[p[i]];
  }
  return r;
}

// All ways of merging the single-head sinks of a normalized partition.
void expand_sinks(const Partition& p, std::vector<Partition>& out, std::size_t cap, bool& capped) {
  std::vector<int> count(p.size() + 1, 0);
  for (int c : p) ++count[c];
  std::vector<int> sinks;
  for (size_t v = 1; v < p.size(); v += 2) {
    if (count[p[v]] == 1) sinks.push_back(static_cast<int>(v));
  }
  const int k = static_cast<int>(sinks.size());
  std::vector<int> block(k, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (capped) return;
    if (i == k) {
      if (out.size() >= cap) {
        capped = true;
        return;
      }
      Partition q = p;
      for (int j = 0; j < k; ++j) q[sinks[j]] = p[sinks[block[j]]];
      out.push_back(relabel(q));
      return;
    }
    // block[i] names the first sink of its block.
    for (int b = 0; b < i; ++b) {
      if (block[b] == b) {
        block[i] = b;
        self(self, i + 1, blocks);
      }
    }
    block[i] = i;
    self(self, i + 1, blocks + 1);
  };
  rec(rec, 0, 0);
}

}  // namespace

PreimageSet enumerate_preimages(const UGraph& g, const PreimageOptions& opt_in) {
  if (g.node_count() > kMaxSearchNodes) {
    throw PreconditionError("graph too large for exhaustive preimage search");
  }
  PreimageOptions opt = opt_in;
  if (opt.jobs < 1) opt.jobs = 1;
  if (opt.stop_at_first) opt.jobs = 1;

  std::atomic<bool> stop{false};
  std::vector<Search> workers;
  workers.reserve(opt.jobs);
  const int split_depth = opt.jobs > 1 ? 4 : -1;
  for (int w = 0; w < opt.jobs; ++w) workers.emplace_back(g, opt, w, split_depth, stop);
  if (opt.jobs == 1) {
    workers[0].run();
  } else {
    std::vector<std::thread> threads;
    for (auto& w : workers) threads.emplace_back([&w] { w.run(); });
    for (auto& t : threads) t.join();
  }

  PreimageSet res;
  res.canonical = opt.dedup;
  std::vector<Partition> all;
  for (auto& w : workers) {
    res.steps += w.steps;
    res.over_budget += w.over_budget;
    if (w.exhausted) res.status = SearchStatus::BudgetExhausted;
    for (auto& p : w.results) all.push_back(std::move(p));
  }
  std::sort(all.begin(), all.end());
  if (!opt.dedup) {
    std::vector<Partition> raw;
    bool capped = false;
    for (const auto& p : all) expand_sinks(p, raw, opt.max_results, capped);
    if (capped) res.status = SearchStatus::BudgetExhausted;
    std::sort(raw.begin(), raw.end());
    all = std::move(raw);
  }
  res.members.reserve(all.size());
  for (const auto& p : all) res.members.push_back(to_preimage(p));
  return res;
}

PreimageDecision has_preimage(const UGraph& g, std::int64_t step_limit) {
  PreimageOptions opt;
  opt.step_limit = step_limit;
  opt.stop_at_first = true;
  PreimageSet s = enumerate_preimages(g, opt);
  PreimageDecision d;
  d.steps = s.steps;
  if (!s.members.empty()) {
    d.answer = Answer::Yes;
    d.witness = std::move(s.members.front());
  } else {
    d.answer = s.status == SearchStatus::Complete ? Answer::No : Answer::Unknown;
  }
  return d;
}

bool labeled_digraph_iso(const Digraph& d1, const Digraph& d2, const ArcCertificate& cert1,
                         const ArcCertificate& cert2) {
  const int m = d1.arc_count();
  if (d2.arc_count() != m || d1.node_count() != d2.node_count()) return false;
  if (!cert1.is_bijection(m) || !cert2.is_bijection(m)) return false;
  std::vector<int> fwd(d1.node_count(), -1), back(d2.node_count(), -1);
  auto bind = [&](int a, int b) {
    if (fwd[a] < 0 && back[b] < 0) {
      fwd[a] = b;
      back[b] = a;
      return true;
    }
    return fwd[a] == b && back[b] == a;
  };
  for (int x = 0; x < m; ++x) {
    const Arc& a = d1.arc(cert1.map[x]);
    const Arc& b = d2.arc(cert2.map[x]);
    if (!bind(a.tail, b.tail) || !bind(a.head, b.head)) return false;
  }
  // Unbound nodes on both sides are isolated and equal in number.
  return true;
}

std::vector<std::vector<int>> automorphisms(const UGraph& g, std::size_t limit) {
  const int n = g.node_count();
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (out.size() >= limit) return;
    if (v == n) {
      out.push_back(map);
      return;
    }
    // Try the identity image first so the identity comes out first.
    for (int k = 0; k < n; ++k) {
      int w = (v + k) % n;
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (u < v && !g.has_edge(map[u], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
    }
    map[v] = -1;
  };
  rec(rec, 0);
  return out;
}

std::size_t count_unlabeled_classes(const UGraph& g, const PreimageSet& s) {
  constexpr std::size_t kLimit = 100'000;
  const auto autos = automorphisms(g, kLimit);
  if (autos.size() >= kLimit) throw Error("too many automorphisms to classify preimages");
  const int n = g.node_count();
  std::vector<const Preimage*> reps;
  ArcCertificate moved;
  moved.map.resize(n);
  for (const Preimage& p : s.members) {
    bool seen = false;
    for (const Preimage* r : reps) {
      for (const auto& sigma : autos) {
        for (int x = 0; x < n; ++x) moved.map[x] = r->cert.map[sigma[x]];
        if (labeled_digraph_iso(p.digraph, r->digraph, p.cert, moved)) {
          seen = true;
          break;
        }
      }
      if (seen) break;
    }
    if (!seen) reps.push_back(&p);
  }
  return reps.size();
}

}  // namespace flg
