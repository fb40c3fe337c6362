// Copyright 2026 The orientkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orientkit/connectivity.hpp"
#include "orientkit/mixed_graph.hpp"

namespace orientkit {

enum class TargetKind { strong, two_arc, two_vertex, two_t };

struct TargetSpec {
  TargetKind kind = TargetKind::strong;
  std::vector<VertexId> t_set;  // only for two_t

  static TargetSpec strong() { return {TargetKind::strong, {}}; }
  static TargetSpec two_arc() { return {TargetKind::two_arc, {}}; }
  static TargetSpec two_vertex() { return {TargetKind::two_vertex, {}}; }
  static TargetSpec two_t(std::vector<VertexId> t) { return {TargetKind::two_t, std::move(t)}; }
};

inline const char* target_name(TargetKind k) {
  switch (k) {
    case TargetKind::strong: return "strong";
    case TargetKind::two_arc: return "two-arc";
    case TargetKind::two_vertex: return "two-vertex";
    case TargetKind::two_t: return "two-T";
  }
  return "?";
}

enum class SearchStatus { found, none, unknown };

struct SearchOutcome {
  SearchStatus status = SearchStatus::none;
  std::optional<Orientation> orientation;  // iff found
  long long nodes_explored = 0;
  long long budget = 0;
  // Human-readable reason when impossibility is already visible at the root
  // (the relaxed super-digraph fails the target).
  std::optional<std::string> impossibility;
};

struct SearchOptions {
  bool prune_relaxation = true;
  bool prune_local = true;
};

inline constexpr long long kDefaultSearchBudget = 10'000'000;

/// Target predicate on a fully directed graph, via the connectivity module.
inline bool satisfies_target(const Digraph& d, const TargetSpec& target) {
  switch (target.kind) {
    case TargetKind::strong: return is_strongly_connected(d);
    case TargetKind::two_arc: return arc_connectivity(d).at_least(2);
    case TargetKind::two_vertex: return is_2vertex_connected(d);
    case TargetKind::two_t: return detail::two_t_holds(d, target.t_set);
  }
  return false;
}

namespace detail {

// Backtracking search over edge directions. The working structure is the
// super-digraph: fixed arcs plus, for every edge, both directions until the
// edge is decided. Orienting an edge only removes arcs, and every target
// predicate is monotone under arc addition, so a failing super-digraph
// prunes the whole subtree.
class OrientationSearcher {
 public:
  OrientationSearcher(const MixedGraph& g, const TargetSpec& target, long long budget,
                      const SearchOptions& opts)
      : g_(g), target_(target), opts_(opts), budget_(budget) {
    if (budget <= 0) throw std::invalid_argument("search budget must be positive");
    if (target.kind == TargetKind::two_t) in_t_ = vertex_mask(g, target.t_set);
    threshold_ = (target.kind == TargetKind::strong) ? 1 : 2;

    int n = g.n();
    arc_out_.resize(n);
    arc_in_.resize(n);
    for (const auto& a : g.arcs()) {
      arc_out_[a.tail].push_back(a.head);
      arc_in_[a.head].push_back(a.tail);
    }
    inc_.resize(n);
    const auto& es = g.edges();
    dir_.assign(es.size(), -1);
    und_cnt_.assign(n, 0);
    dec_in_.assign(n, 0);
    dec_out_.assign(n, 0);
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
      inc_[es[i].a].push_back({i, es[i].b, true});
      inc_[es[i].b].push_back({i, es[i].a, false});
      und_cnt_[es[i].a]++;
      und_cnt_[es[i].b]++;
    }
    for (VertexId v = 0; v < n; ++v) {
      dec_in_[v] = g.arc_in_degree(v);
      dec_out_[v] = g.arc_out_degree(v);
    }
    seen_stamp_.assign(n, 0);
    stack_.reserve(n);

    // Most constrained first: descending endpoint degree sum, ties by id.
    order_.resize(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) order_[i] = static_cast<int>(i);
    std::vector<int> deg(n, 0);
    for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(order_.begin(), order_.end(), [&](int x, int y) {
      int dx = deg[es[x].a] + deg[es[x].b];
      int dy = deg[es[y].a] + deg[es[y].b];
      if (dx != dy) return dx > dy;
      return es[x].id < es[y].id;
    });
  }

  SearchOutcome run() {
    SearchOutcome out;
    out.budget = budget_;
    if (opts_.prune_relaxation && !relax_ok()) {
      out.status = SearchStatus::none;
      out.impossibility = describe_root_failure();
      return out;
    }
    bool found = dfs(0);
    out.nodes_explored = nodes_;
    if (found) {
      Orientation o;
      const auto& es = g_.edges();
      for (std::size_t i = 0; i < es.size(); ++i)
        o.dir[es[i].id] = dir_[i] == 0 ? EdgeDir::forward : EdgeDir::backward;
      // Re-verify through the public predicates before handing it out.
      if (!satisfies_target(apply_orientation(g_, o), target_))
        throw std::logic_error("orientation search produced an invalid orientation");
      out.orientation = std::move(o);
      out.status = SearchStatus::found;
    } else {
      out.status = budget_hit_ ? SearchStatus::unknown : SearchStatus::none;
    }
    return out;
  }

 private:
  struct IncEdge {
    int idx;
    VertexId other;
    bool at_a;
  };

  bool dfs(std::size_t pos) {
    if (pos == order_.size()) return relax_ok();  // no undecided edges: exact predicate
    int idx = order_[pos];
    for (int dval : {0, 1}) {
      if (++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
      }
      assign(idx, dval);
      bool viable = true;
      if (opts_.prune_local && !local_ok(idx)) viable = false;
      if (viable && opts_.prune_relaxation) {
        // On small graphs the full relaxation check runs at every node. On
        // large ones it runs on a fixed cadence (and at every leaf), with a
        // cheap endpoint check in between; skipping a prune is always sound.
        bool full = g_.n() <= kFullRelaxVertexCap || (nodes_ & 15) == 0;
        if (full ? !relax_ok() : !relax_endpoints(idx)) viable = false;
      }
      if (viable && dfs(pos + 1)) return true;
      unassign(idx, dval);
      if (budget_hit_) return false;
    }
    return false;
  }

  static constexpr int kFullRelaxVertexCap = 40;

  void assign(int idx, int dval) {
    const Edge& e = g_.edges()[idx];
    dir_[idx] = static_cast<int8_t>(dval);
    und_cnt_[e.a]--;
    und_cnt_[e.b]--;
    VertexId from = dval == 0 ? e.a : e.b;
    VertexId to = dval == 0 ? e.b : e.a;
    dec_out_[from]++;
    dec_in_[to]++;
  }

  void unassign(int idx, int dval) {
    const Edge& e = g_.edges()[idx];
    dir_[idx] = -1;
    und_cnt_[e.a]++;
    und_cnt_[e.b]++;
    VertexId from = dval == 0 ? e.a : e.b;
    VertexId to = dval == 0 ? e.b : e.a;
    dec_out_[from]--;
    dec_in_[to]--;
  }

  // A vertex with every incident link decided needs in- and out-degree at
  // least the target threshold.
  bool local_ok(int idx) const {
    const Edge& e = g_.edges()[idx];
    for (VertexId v : {e.a, e.b}) {
      if (und_cnt_[v] == 0 && (dec_in_[v] < threshold_ || dec_out_[v] < threshold_)) return false;
    }
    return true;
  }

  // Relaxed singleton bound at v: undecided incident edges still count both
  // ways, so in- and out-degree can each reach dec + undecided.
  bool endpoint_bound(VertexId v) const {
    return dec_in_[v] + und_cnt_[v] >= threshold_ && dec_out_[v] + und_cnt_[v] >= threshold_;
  }

  // Cheap between-sweeps check after deciding one edge: only its endpoints'
  // singleton bounds can newly break, plus the strong checks most likely to
  // catch a fresh violation.
  bool relax_endpoints(int idx) const {
    const Edge& e = g_.edges()[idx];
    if (!endpoint_bound(e.a) || !endpoint_bound(e.b)) return false;
    switch (target_.kind) {
      case TargetKind::strong:
        return strong_skip(-1);
      case TargetKind::two_arc:
        return true;
      case TargetKind::two_vertex:
        if (!strong_skip(last_fail_)) return false;
        return strong_skip(e.a) && strong_skip(e.b);
      case TargetKind::two_t:
        if (in_t_[e.a] && !strong_skip(e.a)) return false;
        if (in_t_[e.b] && !strong_skip(e.b)) return false;
        return true;
    }
    return true;
  }

  // Edge usable from vertex `side_a ? a : b` toward the other endpoint?
  bool edge_usable(const IncEdge& ie, bool outward) const {
    int d = dir_[ie.idx];
    if (d == -1) return true;
    bool oriented_away_from_here = (d == 0) == ie.at_a;
    return outward ? oriented_away_from_here : !oriented_away_from_here;
  }

  bool reach_all(VertexId root, bool forward, VertexId skip) const {
    int want = g_.n() - (skip >= 0 ? 1 : 0);
    int stamp = ++stamp_counter_;
    stack_.clear();
    stack_.push_back(root);
    seen_stamp_[root] = stamp;
    int cnt = 1;
    while (!stack_.empty()) {
      VertexId u = stack_.back();
      stack_.pop_back();
      const auto& arcs = forward ? arc_out_[u] : arc_in_[u];
      for (VertexId w : arcs)
        if (w != skip && seen_stamp_[w] != stamp) {
          seen_stamp_[w] = stamp;
          ++cnt;
          stack_.push_back(w);
        }
      for (const IncEdge& ie : inc_[u])
        if (ie.other != skip && seen_stamp_[ie.other] != stamp && edge_usable(ie, forward)) {
          seen_stamp_[ie.other] = stamp;
          ++cnt;
          stack_.push_back(ie.other);
        }
    }
    return cnt == want;
  }

  bool strong_skip(VertexId skip) const {
    int m = g_.n() - (skip >= 0 ? 1 : 0);
    if (m <= 1) return true;
    VertexId root = (skip == 0) ? 1 : 0;
    return reach_all(root, true, skip) && reach_all(root, false, skip);
  }

  // All single-vertex deletions leave the relaxed digraph strong. Checking
  // the vertex that failed last time first makes pruned nodes cheap: a
  // failing branch usually keeps failing at the same place.
  bool all_deletions_strong() const {
    if (!strong_skip(last_fail_)) return false;
    for (VertexId v = 0; v < g_.n(); ++v) {
      if (v == last_fail_) continue;
      if (!strong_skip(v)) {
        last_fail_ = v;
        return false;
      }
    }
    return true;
  }

  bool two_arc_ok() const {
    int n = g_.n();
    if (n <= 1) return true;
    for (VertexId v = 1; v < n; ++v) {
      if (flow_at_most_one(0, v) || flow_at_most_one(v, 0)) return false;
    }
    return true;
  }

  // Max flow s->t capped at 2 over the current super-digraph; true iff < 2.
  bool flow_at_most_one(VertexId s, VertexId t) const {
    FlowNetwork net(g_.n());
    for (const auto& a : g_.arcs()) net.add_arc(a.tail, a.head, 1);
    const auto& es = g_.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (dir_[i] == -1) {
        net.add_arc(es[i].a, es[i].b, 1);
        net.add_arc(es[i].b, es[i].a, 1);
      } else if (dir_[i] == 0) {
        net.add_arc(es[i].a, es[i].b, 1);
      } else {
        net.add_arc(es[i].b, es[i].a, 1);
      }
    }
    return net.max_flow(s, t, 2) < 2;
  }

  bool relax_ok() const {
    switch (target_.kind) {
      case TargetKind::strong:
        return strong_skip(-1);
      case TargetKind::two_arc:
        return two_arc_ok();
      case TargetKind::two_vertex:
        return g_.n() >= 3 && all_deletions_strong();
      case TargetKind::two_t: {
        for (VertexId v = 0; v < g_.n(); ++v)
          if (in_t_[v] && !strong_skip(v)) return false;
        return two_arc_ok();
      }
    }
    return false;
  }

  std::string describe_root_failure() const {
    std::ostringstream os;
    os << "no orientation can be " << target_name(target_.kind) << ": ";
    switch (target_.kind) {
      case TargetKind::strong:
        os << "the input with all edges usable both ways is not strongly connected";
        break;
      case TargetKind::two_arc:
        os << "the input with all edges usable both ways is not 2-arc-connected";
        break;
      case TargetKind::two_vertex:
        if (g_.n() < 3) {
          os << "fewer than 3 vertices";
        } else {
          for (VertexId v = 0; v < g_.n(); ++v)
            if (!strong_skip(v)) {
              os << "deleting vertex '" << g_.name(v) << "' disconnects it";
              break;
            }
        }
        break;
      case TargetKind::two_t:
        if (!two_arc_ok()) {
          os << "the input with all edges usable both ways is not 2-arc-connected";
        } else {
          for (VertexId v = 0; v < g_.n(); ++v)
            if (in_t_[v] && !strong_skip(v)) {
              os << "deleting T-vertex '" << g_.name(v) << "' disconnects it";
              break;
            }
        }
        break;
    }
    return os.str();
  }

  const MixedGraph& g_;
  TargetSpec target_;
  SearchOptions opts_;
  long long budget_;
  long long nodes_ = 0;
  bool budget_hit_ = false;
  int threshold_ = 1;

  std::vector<int> order_;
  std::vector<int8_t> dir_;
  std::vector<std::vector<VertexId>> arc_out_, arc_in_;
  std::vector<std::vector<IncEdge>> inc_;
  std::vector<int> und_cnt_, dec_in_, dec_out_;
  std::vector<bool> in_t_;

  mutable std::vector<int> seen_stamp_;
  mutable std::vector<VertexId> stack_;
  mutable int stamp_counter_ = 0;
  mutable VertexId last_fail_ = 0;
};

}  // namespace detail

/// Exhaustive orientation search with sound pruning. `found` outcomes carry
/// an orientation that has been re-verified against the target predicate;
/// `none` means the search tree was exhausted; `unknown` means the node
/// budget ran out first.
inline SearchOutcome exact_orientation_search(const MixedGraph& m, const TargetSpec& target,
                                              long long budget = kDefaultSearchBudget,
                                              const SearchOptions& opts = {}) {
  return detail::OrientationSearcher(m, target, budget, opts).run();
}

// ---------------------------------------------------------------------------
// Classical theorem predicates and the Robbins constructor.

struct RobbinsResult {
  std::optional<Orientation> orientation;
  std::optional<CutWitness> witness;  // bridge cut or disconnection on failure
};

/// Strongly connected orientation of a 2-edge-connected graph: DFS tree arcs
/// oriented root-down, every other edge descendant-to-ancestor. Returns the
/// violated cut instead when lambda(G) < 2.
inline RobbinsResult robbins_orientation(const Graph& g) {
  detail::require_graph(g, "robbins_orientation");
  auto lam = edge_connectivity(g);
  if (!lam.at_least(2)) return {std::nullopt, lam.witness};

  Orientation o;
  if (g.n() == 0) return {o, std::nullopt};

  std::vector<std::vector<std::pair<int, VertexId>>> inc(g.n());  // (edge index, other)
  const auto& es = g.edges();
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    inc[es[i].a].push_back({i, es[i].b});
    inc[es[i].b].push_back({i, es[i].a});
  }
  std::vector<int> disc(g.n(), -1);
  int time = 0;
  std::function<void(VertexId)> dfs = [&](VertexId u) {
    disc[u] = time++;
    for (auto [ei, w] : inc[u]) {
      const Edge& e = es[ei];
      if (o.dir.count(e.id)) continue;
      // Tree edge (w undiscovered) or back edge to an ancestor: both u -> w.
      o.dir[e.id] = (e.a == u) ? EdgeDir::forward : EdgeDir::backward;
      if (disc[w] == -1) dfs(w);
    }
  };
  dfs(0);
  return {o, std::nullopt};
}

/// Nash-Williams condition for a k-arc-connected orientation.
inline bool nash_williams_predicate(const Graph& g, int k) {
  detail::require_graph(g, "nash_williams_predicate");
  if (k < 1) throw std::invalid_argument("nash_williams_predicate: k must be >= 1");
  return edge_connectivity(g).at_least(2 * k);
}

struct ConnPredicateResult {
  bool holds = true;
  std::optional<std::string> vertex;  // failing deleted vertex, when applicable
  std::optional<CutWitness> cut;      // violated cut (of G, or of G - vertex)
};

/// Thomassen's condition for a 2-vertex-connected orientation:
/// G 4-edge-connected and G-v 2-edge-connected for all v.
inline ConnPredicateResult thomassen_predicate(const Graph& g) {
  detail::require_graph(g, "thomassen_predicate");
  auto lam = edge_connectivity(g);
  if (!lam.at_least(4)) return {false, std::nullopt, lam.witness};
  for (VertexId v = 0; v < g.n(); ++v) {
    auto inner = edge_connectivity(delete_vertex(g, v));
    if (!inner.at_least(2)) return {false, g.name(v), inner.witness};
  }
  return {};
}

struct BtResult {
  bool holds = true;
  std::vector<std::string> violating;  // first X with d_A^-(X) + d_E(X)/2 < 1
  int arc_in = 0;
  int edge_cut = 0;
};

/// Literal evaluation of the Boesch-Tindell inequality
/// d_A^-(X) + (1/2) d_E(X) >= 1 over all nonempty proper X. Diagnostic only:
/// existence of strong orientations of mixed graphs is decided by search
/// (the two can disagree; the harness has a dedicated divergence channel).
inline BtResult bt_predicate(const MixedGraph& m) {
  if (m.n() > 20) throw std::invalid_argument("bt_predicate: more than 20 vertices");
  int n = m.n();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<bool> x(n, false);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    int ain = d_A_in(m, x);
    int de = d_E(m, x);
    if (2 * ain + de < 2) {
      BtResult r;
      r.holds = false;
      r.violating = detail::mask_names(m, x, true);
      r.arc_in = ain;
      r.edge_cut = de;
      return r;
    }
  }
  return {};
}

}  // namespace orientkit
