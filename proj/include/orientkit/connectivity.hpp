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

#include <climits>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "orientkit/mixed_graph.hpp"

namespace orientkit {

/// One side of a cut together with the number of links crossing it.
struct CutWitness {
  enum class Kind { edge_cut, arc_in_cut };
  std::vector<std::string> side;  // vertex names in graph order
  Kind kind = Kind::edge_cut;
  int value = 0;
};

/// Connectivity value with the single-vertex "infinity" convention.
struct ConnResult {
  bool infinite = false;
  int value = 0;
  std::optional<CutWitness> witness;  // present iff finite

  bool at_least(int k) const { return infinite || value >= k; }
};

/// Two directed paths with the same endpoints sharing no other vertex.
struct PathPair {
  std::vector<std::string> first;
  std::vector<std::string> second;
};

namespace detail {

// Unit-ish capacity max flow (BFS augmenting paths). Small graphs only.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(static_cast<std::size_t>(n)) {}

  int add_node() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }

  int node_count() const { return static_cast<int>(adj_.size()); }

  void add_arc(int u, int v, int cap) {
    adj_[u].push_back({v, cap, static_cast<int>(adj_[v].size()), cap});
    adj_[v].push_back({u, 0, static_cast<int>(adj_[u].size()) - 1, 0});
  }

  int max_flow(int s, int t, int limit = INT_MAX) {
    int flow = 0;
    while (flow < limit) {
      // BFS for a shortest augmenting path.
      std::vector<int> prev_node(adj_.size(), -1), prev_arc(adj_.size(), -1);
      std::deque<int> q{s};
      prev_node[s] = s;
      while (!q.empty() && prev_node[t] == -1) {
        int u = q.front();
        q.pop_front();
        for (int i = 0; i < static_cast<int>(adj_[u].size()); ++i) {
          const FArc& a = adj_[u][i];
          if (a.cap > 0 && prev_node[a.to] == -1) {
            prev_node[a.to] = u;
            prev_arc[a.to] = i;
            q.push_back(a.to);
          }
        }
      }
      if (prev_node[t] == -1) break;
      for (int v = t; v != s; v = prev_node[v]) {
        FArc& a = adj_[prev_node[v]][prev_arc[v]];
        a.cap -= 1;
        adj_[a.to][a.rev].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network (source side of the
  /// min cut once max_flow has run to completion).
  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> q{s};
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const FArc& a : adj_[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          q.push_back(a.to);
        }
    }
    return seen;
  }

  /// Units of flow currently routed on the i-th arc out of u.
  int flow_on(int u, int i) const {
    const FArc& a = adj_[u][i];
    return a.orig_cap - a.cap;
  }

  int arc_count(int u) const { return static_cast<int>(adj_[u].size()); }
  int arc_to(int u, int i) const { return adj_[u][i].to; }
  bool arc_is_real(int u, int i) const { return adj_[u][i].orig_cap > 0; }

  void consume_unit(int u, int i) {
    adj_[u][i].cap += 1;  // give the unit back so it is not walked twice
    adj_[adj_[u][i].to][adj_[u][i].rev].cap -= 1;
  }

 private:
  struct FArc {
    int to;
    int cap;
    int rev;
    int orig_cap;
  };
  std::vector<std::vector<FArc>> adj_;
};

// Forward/backward adjacency over the arcs of a digraph, with an optional
// skipped vertex, for cheap repeated reachability checks.
struct DigraphView {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> in;

  explicit DigraphView(const MixedGraph& d)
      : out(static_cast<std::size_t>(d.n())), in(static_cast<std::size_t>(d.n())) {
    for (const auto& a : d.arcs()) {
      out[a.tail].push_back(a.head);
      in[a.head].push_back(a.tail);
    }
  }

  bool strongly_connected(VertexId skip = -1) const {
    int n = static_cast<int>(out.size());
    int m = n - (skip >= 0 ? 1 : 0);
    if (m <= 1) return true;
    VertexId root = (skip == 0) ? 1 : 0;
    auto reach = [&](const std::vector<std::vector<VertexId>>& adj) {
      std::vector<bool> seen(out.size(), false);
      std::deque<VertexId> q{root};
      seen[root] = true;
      int cnt = 1;
      while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : adj[u])
          if (v != skip && !seen[v]) {
            seen[v] = true;
            ++cnt;
            q.push_back(v);
          }
      }
      return cnt == m;
    };
    return reach(out) && reach(in);
  }
};

inline std::vector<std::string> mask_names(const MixedGraph& g, const std::vector<bool>& mask, bool value) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < g.n(); ++v)
    if (mask[v] == value) out.push_back(g.name(v));
  return out;
}

inline void require_digraph(const MixedGraph& d, const char* op) {
  if (!d.is_digraph()) throw std::invalid_argument(std::string(op) + ": expected a digraph (no undirected edges)");
}

inline void require_graph(const MixedGraph& g, const char* op) {
  if (!g.is_graph()) throw std::invalid_argument(std::string(op) + ": expected a graph (no arcs)");
}

}  // namespace detail

/// True iff every ordered pair of vertices is joined by a directed path.
/// A single vertex (or the empty digraph) counts as strongly connected.
inline bool is_strongly_connected(const Digraph& d) {
  detail::require_digraph(d, "is_strongly_connected");
  return detail::DigraphView(d).strongly_connected();
}

/// Whether the underlying undirected structure (edges and arcs alike) is
/// connected.
inline bool is_connected_underlying(const MixedGraph& g) {
  if (g.n() <= 1) return true;
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.n()));
  for (const auto& e : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (const auto& a : g.arcs()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  std::deque<VertexId> q{0};
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    for (VertexId v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++cnt;
        q.push_back(v);
      }
  }
  return cnt == g.n();
}

/// lambda(G) = min over nonempty proper X of d_E(X), computed with
/// unit-capacity flows from a fixed root. Single vertex: infinity.
/// Returns a minimizing cut witness when finite.
inline ConnResult edge_connectivity(const Graph& g) {
  detail::require_graph(g, "edge_connectivity");
  if (g.n() <= 1) return {true, 0, std::nullopt};

  int best = INT_MAX;
  std::vector<bool> best_side;
  for (VertexId v = 1; v < g.n(); ++v) {
    detail::FlowNetwork net(g.n());
    for (const auto& e : g.edges()) {
      net.add_arc(e.a, e.b, 1);
      net.add_arc(e.b, e.a, 1);
    }
    int f = net.max_flow(0, v, best);
    if (f < best) {
      best = f;
      best_side = net.residual_reachable(0);  // source side; symmetric for edges
    }
  }
  CutWitness w;
  w.kind = CutWitness::Kind::edge_cut;
  w.side = detail::mask_names(g, best_side, true);
  w.value = best;
  return {false, best, w};
}

/// Minimum over nonempty proper X of d_A^-(X) via unit-capacity flows from
/// and to a fixed root. Single vertex: infinity.
inline ConnResult arc_connectivity(const Digraph& d) {
  detail::require_digraph(d, "arc_connectivity");
  if (d.n() <= 1) return {true, 0, std::nullopt};

  int best = INT_MAX;
  std::vector<bool> best_side;
  auto run = [&](VertexId s, VertexId t) {
    detail::FlowNetwork net(d.n());
    for (const auto& a : d.arcs()) net.add_arc(a.tail, a.head, 1);
    int f = net.max_flow(s, t, best);
    if (f < best) {
      best = f;
      // Sink side: the entering arcs of V - reach(s) are exactly the
      // saturated crossing arcs, so d_A^-(side) equals the flow value.
      auto reach = net.residual_reachable(s);
      best_side.assign(reach.size(), false);
      for (std::size_t i = 0; i < reach.size(); ++i) best_side[i] = !reach[i];
    }
  };
  for (VertexId v = 1; v < d.n(); ++v) {
    run(0, v);
    run(v, 0);
  }
  CutWitness w;
  w.kind = CutWitness::Kind::arc_in_cut;
  w.side = detail::mask_names(d, best_side, true);
  w.value = best;
  return {false, best, w};
}

/// Deletion form of 2-vertex-connectivity: |V| >= 3 and D-v strongly
/// connected for every v.
inline bool is_2vertex_connected(const Digraph& d) {
  detail::require_digraph(d, "is_2vertex_connected");
  if (d.n() < 3) return false;
  detail::DigraphView view(d);
  for (VertexId v = 0; v < d.n(); ++v)
    if (!view.strongly_connected(v)) return false;
  return true;
}

/// Whether k pairwise internally disjoint directed u->v paths exist,
/// by vertex-splitting maximum flow. When k == 2 and the answer is yes,
/// fills *out (if given) with two such paths.
inline bool internally_disjoint_paths(const Digraph& d, VertexId u, VertexId v, int k,
                                      PathPair* out = nullptr) {
  detail::require_digraph(d, "internally_disjoint_paths");
  if (u == v) throw std::invalid_argument("internally_disjoint_paths: u == v");
  if (u < 0 || v < 0 || u >= d.n() || v >= d.n())
    throw std::invalid_argument("internally_disjoint_paths: vertex out of range");

  // Node 2w = in(w), 2w+1 = out(w). Interior vertices get a unit in->out
  // link; u and v are not split (source = out(u), sink = in(v)).
  detail::FlowNetwork net(2 * d.n());
  for (VertexId w = 0; w < d.n(); ++w)
    if (w != u && w != v) net.add_arc(2 * w, 2 * w + 1, 1);
  for (const auto& a : d.arcs()) net.add_arc(2 * a.tail + 1, 2 * a.head, 1);
  int s = 2 * u + 1;
  int t = 2 * v;
  int f = net.max_flow(s, t, k);
  if (f < k) return false;

  if (k == 2 && out != nullptr) {
    auto walk = [&]() {
      std::vector<std::string> path{d.name(u)};
      int cur = s;
      while (cur != t) {
        bool advanced = false;
        for (int i = 0; i < net.arc_count(cur); ++i) {
          if (net.arc_is_real(cur, i) && net.flow_on(cur, i) > 0) {
            net.consume_unit(cur, i);
            cur = net.arc_to(cur, i);
            if (cur % 2 == 0 && cur != t) {
              path.push_back(d.name(cur / 2));
            }
            advanced = true;
            break;
          }
        }
        if (!advanced) throw std::logic_error("flow decomposition stuck");
      }
      path.push_back(d.name(v));
      return path;
    };
    out->first = walk();
    out->second = walk();
  }
  return true;
}

inline bool internally_disjoint_paths(const Digraph& d, const std::string& u, const std::string& v,
                                      int k, PathPair* out = nullptr) {
  return internally_disjoint_paths(d, d.vertex(u), d.vertex(v), k, out);
}

/// 2-vertex-connected in X: |V| >= 3 and two internally disjoint directed
/// paths between every ordered pair of X vertices.
inline bool is_2vc_in(const Digraph& d, const std::vector<VertexId>& x) {
  detail::require_digraph(d, "is_2vc_in");
  for (VertexId v : x)
    if (v < 0 || v >= d.n()) throw std::invalid_argument("is_2vc_in: vertex out of range");
  if (d.n() < 3) return false;
  for (VertexId a : x)
    for (VertexId b : x) {
      if (a == b) continue;
      if (!internally_disjoint_paths(d, a, b, 2)) return false;
    }
  return true;
}

/// Two (v,X)-paths whose vertex sets intersect only in v: flow of value 2
/// from v to a super-sink absorbing X, with interior vertex splitting.
inline bool two_paths_vertex_to_set(const Digraph& d, VertexId v, const std::vector<VertexId>& x) {
  detail::require_digraph(d, "two_paths_vertex_to_set");
  std::vector<bool> in_x = vertex_mask(d, x);
  if (in_x[v]) throw std::invalid_argument("two_paths_vertex_to_set: v must lie outside X");
  if (x.empty()) return false;

  detail::FlowNetwork net(2 * d.n() + 1);
  int sink = 2 * d.n();
  for (VertexId w = 0; w < d.n(); ++w) {
    if (w == v) continue;
    if (in_x[w])
      net.add_arc(2 * w, sink, 1);  // entering X ends the path; one path per X vertex
    else
      net.add_arc(2 * w, 2 * w + 1, 1);
  }
  for (const auto& a : d.arcs()) {
    if (in_x[a.tail]) continue;  // paths stop at the first X vertex
    net.add_arc(2 * a.tail + 1, 2 * a.head, 1);
  }
  return net.max_flow(2 * v + 1, sink, 2) >= 2;
}

/// Two (X,v)-paths whose vertex sets intersect only in v.
inline bool two_paths_set_to_vertex(const Digraph& d, const std::vector<VertexId>& x, VertexId v) {
  detail::require_digraph(d, "two_paths_set_to_vertex");
  std::vector<bool> in_x = vertex_mask(d, x);
  if (in_x[v]) throw std::invalid_argument("two_paths_set_to_vertex: v must lie outside X");
  if (x.empty()) return false;

  detail::FlowNetwork net(2 * d.n() + 1);
  int source = 2 * d.n();
  for (VertexId w = 0; w < d.n(); ++w) {
    if (w == v) continue;
    if (in_x[w])
      net.add_arc(source, 2 * w + 1, 1);  // one path may start at each X vertex
    else
      net.add_arc(2 * w, 2 * w + 1, 1);
  }
  for (const auto& a : d.arcs()) {
    if (in_x[a.head]) continue;  // a path leaves X only once, at its start
    net.add_arc(2 * a.tail + 1, 2 * a.head, 1);
  }
  return net.max_flow(source, 2 * v, 2) >= 2;
}

namespace detail {

/// Shared content of the 2T predicate: 2-arc-connected and strongly
/// connected after deleting any single vertex of T.
inline bool two_t_holds(const Digraph& d, const std::vector<VertexId>& t) {
  if (!arc_connectivity(d).at_least(2)) return false;
  DigraphView view(d);
  for (VertexId v : t)
    if (!view.strongly_connected(v)) return false;
  return true;
}

}  // namespace detail

}  // namespace orientkit
