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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace orientkit {

/// Dense internal vertex id. The external identity of a vertex is its
/// interned name; ids are assigned in insertion order.
using VertexId = int;

struct Edge {
  VertexId a = -1;
  VertexId b = -1;
  int id = -1;
};

struct Arc {
  VertexId tail = -1;
  VertexId head = -1;
  int id = -1;
  // When this arc realizes an oriented undirected edge, the id of that edge;
  // -1 for arcs that were arcs all along.
  int from_edge = -1;
};

/// A mixed graph: a vertex set plus a multiset of undirected edges and a
/// multiset of arcs. Parallel edges and parallel arcs are permitted; loops
/// are rejected at construction. Edge ids and arc ids are stable across the
/// structural transformations below (orienting, contracting, blowing up).
///
/// Values are intended to be immutable once built; all transformations
/// construct new graphs.
class MixedGraph {
 public:
  MixedGraph() = default;

  VertexId add_vertex(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    VertexId id = static_cast<VertexId>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }

  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }

  VertexId vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
    return it->second;
  }

  const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }

  int add_edge(VertexId a, VertexId b) { return add_edge_with_id(a, b, next_edge_id()); }

  int add_edge(const std::string& a, const std::string& b) {
    VertexId va = add_vertex(a);
    VertexId vb = add_vertex(b);
    return add_edge(va, vb);
  }

  int add_edge_with_id(VertexId a, VertexId b, int id) {
    check_link(a, b, "edge");
    if (edge_pos_.count(id)) throw std::invalid_argument("duplicate edge id " + std::to_string(id));
    edge_pos_.emplace(id, edges_.size());
    edges_.push_back(Edge{a, b, id});
    return id;
  }

  int add_arc(VertexId tail, VertexId head, int from_edge = -1) {
    return add_arc_with_id(tail, head, next_arc_id(), from_edge);
  }

  int add_arc(const std::string& tail, const std::string& head) {
    VertexId t = add_vertex(tail);
    VertexId h = add_vertex(head);
    return add_arc(t, h);
  }

  int add_arc_with_id(VertexId tail, VertexId head, int id, int from_edge = -1) {
    check_link(tail, head, "arc");
    if (arc_pos_.count(id)) throw std::invalid_argument("duplicate arc id " + std::to_string(id));
    arc_pos_.emplace(id, arcs_.size());
    arcs_.push_back(Arc{tail, head, id, from_edge});
    return id;
  }

  int n() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const Edge& edge(int id) const {
    auto it = edge_pos_.find(id);
    if (it == edge_pos_.end()) throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return edges_[it->second];
  }

  bool has_edge_id(int id) const { return edge_pos_.count(id) > 0; }

  const Arc& arc(int id) const {
    auto it = arc_pos_.find(id);
    if (it == arc_pos_.end()) throw std::invalid_argument("unknown arc id " + std::to_string(id));
    return arcs_[it->second];
  }

  bool is_graph() const { return arcs_.empty(); }
  bool is_digraph() const { return edges_.empty(); }

  int next_edge_id() const {
    int m = -1;
    for (const auto& e : edges_) m = std::max(m, e.id);
    return m + 1;
  }

  int next_arc_id() const {
    int m = -1;
    for (const auto& a : arcs_) m = std::max(m, a.id);
    return m + 1;
  }

  /// Ids of edges incident to v, in stored order.
  std::vector<int> incident_edges(VertexId v) const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (e.a == v || e.b == v) out.push_back(e.id);
    return out;
  }

  int edge_degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.a == v) + (e.b == v);
    return d;
  }

  int arc_in_degree(VertexId v) const {
    int d = 0;
    for (const auto& a : arcs_) d += (a.head == v);
    return d;
  }

  int arc_out_degree(VertexId v) const {
    int d = 0;
    for (const auto& a : arcs_) d += (a.tail == v);
    return d;
  }

  /// Total incident links (edges + arcs, either direction).
  int degree(VertexId v) const { return edge_degree(v) + arc_in_degree(v) + arc_out_degree(v); }

  bool operator==(const MixedGraph& o) const {
    auto edge_key = [](const Edge& e) { return std::tuple(e.id, e.a, e.b); };
    auto arc_key = [](const Arc& a) { return std::tuple(a.id, a.tail, a.head, a.from_edge); };
    if (names_ != o.names_) return false;
    if (edges_.size() != o.edges_.size() || arcs_.size() != o.arcs_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edge_key(edges_[i]) != edge_key(o.edges_[i])) return false;
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      if (arc_key(arcs_[i]) != arc_key(o.arcs_[i])) return false;
    return true;
  }

 private:
  void check_link(VertexId x, VertexId y, const char* what) const {
    if (x < 0 || y < 0 || x >= n() || y >= n())
      throw std::invalid_argument(std::string(what) + " endpoint out of range");
    if (x == y)
      throw std::invalid_argument(std::string("loop ") + what + " at vertex " + names_[static_cast<std::size_t>(x)]);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::unordered_map<int, std::size_t> edge_pos_;
  std::unordered_map<int, std::size_t> arc_pos_;
};

/// Aliases for readability: a Graph is a MixedGraph with no arcs, a Digraph
/// one with no edges. Operations check the precondition at run time.
using Graph = MixedGraph;
using Digraph = MixedGraph;

enum class EdgeDir : std::uint8_t { forward, backward };  // forward = endpointA -> endpointB

/// A total direction assignment for the undirected edges of one graph,
/// keyed by edge id.
struct Orientation {
  std::map<int, EdgeDir> dir;

  bool operator==(const Orientation&) const = default;
};

// ---------------------------------------------------------------------------
// Subset degree functions d_E, d_A^-, d_A^+.

inline std::vector<bool> vertex_mask(const MixedGraph& g, const std::vector<VertexId>& xs) {
  std::vector<bool> m(static_cast<std::size_t>(g.n()), false);
  for (VertexId v : xs) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex id out of range");
    m[static_cast<std::size_t>(v)] = true;
  }
  return m;
}

/// Number of edges with exactly one endpoint in X.
inline int d_E(const MixedGraph& g, const std::vector<bool>& x) {
  int c = 0;
  for (const auto& e : g.edges()) c += (x[e.a] != x[e.b]);
  return c;
}

/// Number of arcs entering X (tail outside, head inside).
inline int d_A_in(const MixedGraph& g, const std::vector<bool>& x) {
  int c = 0;
  for (const auto& a : g.arcs()) c += (!x[a.tail] && x[a.head]);
  return c;
}

/// Number of arcs leaving X.
inline int d_A_out(const MixedGraph& g, const std::vector<bool>& x) {
  int c = 0;
  for (const auto& a : g.arcs()) c += (x[a.tail] && !x[a.head]);
  return c;
}

// ---------------------------------------------------------------------------
// Structural transformations.

/// Directs every undirected edge of m according to o. Original arcs keep
/// their arc ids; each oriented edge becomes a fresh arc carrying the edge id
/// in Arc::from_edge. Throws if o is not total on m's edges.
inline Digraph apply_orientation(const MixedGraph& m, const Orientation& o) {
  Digraph d;
  for (const auto& nm : m.vertex_names()) d.add_vertex(nm);
  for (const auto& a : m.arcs()) d.add_arc_with_id(a.tail, a.head, a.id, a.from_edge);

  for (const auto& [id, _] : o.dir)
    if (!m.has_edge_id(id))
      throw std::invalid_argument("orientation refers to unknown edge id " + std::to_string(id));

  std::vector<Edge> sorted = m.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  int next = d.next_arc_id();
  for (const auto& e : sorted) {
    auto it = o.dir.find(e.id);
    if (it == o.dir.end())
      throw std::invalid_argument("partial orientation: missing edge id " + std::to_string(e.id));
    if (it->second == EdgeDir::forward)
      d.add_arc_with_id(e.a, e.b, next++, e.id);
    else
      d.add_arc_with_id(e.b, e.a, next++, e.id);
  }
  return d;
}

/// Merges the vertex set S into a single vertex named `label`. Links with
/// exactly one endpoint in S are redirected to the label, keeping their ids;
/// links inside S would become loops and are dropped. The label takes the
/// position of the first S member in vertex order.
inline MixedGraph contract(const MixedGraph& d, const std::vector<VertexId>& s, const std::string& label) {
  if (s.empty()) throw std::invalid_argument("contract: S is empty");
  std::vector<bool> in_s = vertex_mask(d, s);

  for (VertexId v = 0; v < d.n(); ++v)
    if (!in_s[v] && d.name(v) == label)
      throw std::invalid_argument("contract: label '" + label + "' collides with a surviving vertex");

  MixedGraph out;
  bool placed = false;
  std::vector<VertexId> remap(static_cast<std::size_t>(d.n()), -1);
  for (VertexId v = 0; v < d.n(); ++v) {
    if (in_s[v]) {
      if (!placed) {
        placed = true;
        out.add_vertex(label);
      }
    } else {
      out.add_vertex(d.name(v));
    }
  }
  VertexId merged = out.vertex(label);
  for (VertexId v = 0; v < d.n(); ++v)
    remap[static_cast<std::size_t>(v)] = in_s[v] ? merged : out.vertex(d.name(v));

  for (const auto& a : d.arcs()) {
    if (in_s[a.tail] && in_s[a.head]) continue;
    out.add_arc_with_id(remap[a.tail], remap[a.head], a.id, a.from_edge);
  }
  for (const auto& e : d.edges()) {
    if (in_s[e.a] && in_s[e.b]) continue;
    out.add_edge_with_id(remap[e.a], remap[e.b], e.id);
  }
  return out;
}

inline MixedGraph contract(const MixedGraph& d, const std::vector<std::string>& s_names, const std::string& label) {
  std::vector<VertexId> s;
  s.reserve(s_names.size());
  for (const auto& nm : s_names) s.push_back(d.vertex(nm));
  return contract(d, s, label);
}

/// Replaces vertex v of G by the graph H; every edge that was incident to v
/// is reattached to the H vertex named by `attach` (keyed by edge id), keeping
/// its edge id. H's own edges receive fresh ids. Both G and H must be pure
/// graphs and V(H) must be disjoint from V(G)-v.
inline Graph blow_up(const Graph& g, const std::string& v_name, const Graph& h,
                     const std::map<int, std::string>& attach) {
  if (!g.is_graph() || !h.is_graph()) throw std::invalid_argument("blow_up: expects pure graphs");
  VertexId v = g.vertex(v_name);
  for (const auto& nm : h.vertex_names())
    if (g.has_vertex(nm) && nm != v_name)
      throw std::invalid_argument("blow_up: H vertex '" + nm + "' already present in G");

  std::vector<int> incident = g.incident_edges(v);
  for (int eid : incident) {
    auto it = attach.find(eid);
    if (it == attach.end())
      throw std::invalid_argument("blow_up: attach map missing incident edge " + std::to_string(eid));
    if (!h.has_vertex(it->second))
      throw std::invalid_argument("blow_up: attach target '" + it->second + "' not in H");
  }

  Graph out;
  for (VertexId u = 0; u < g.n(); ++u)
    if (u != v) out.add_vertex(g.name(u));
  for (const auto& nm : h.vertex_names()) out.add_vertex(nm);

  for (const auto& e : g.edges()) {
    if (e.a == v) {
      out.add_edge_with_id(out.vertex(attach.at(e.id)), out.vertex(g.name(e.b)), e.id);
    } else if (e.b == v) {
      out.add_edge_with_id(out.vertex(g.name(e.a)), out.vertex(attach.at(e.id)), e.id);
    } else {
      out.add_edge_with_id(out.vertex(g.name(e.a)), out.vertex(g.name(e.b)), e.id);
    }
  }
  int next = out.next_edge_id();
  std::vector<Edge> h_edges = h.edges();
  std::sort(h_edges.begin(), h_edges.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (const auto& e : h_edges)
    out.add_edge_with_id(out.vertex(h.name(e.a)), out.vertex(h.name(e.b)), next++);
  return out;
}

/// Cycle on k vertices with every edge doubled: k vertices of degree 4,
/// 2k edges. Vertices are named <prefix>0 .. <prefix>{k-1}.
inline Graph double_cycle(int k, const std::string& prefix = "c") {
  if (k < 2) throw std::invalid_argument("double_cycle: k must be >= 2");
  Graph g;
  for (int i = 0; i < k; ++i) g.add_vertex(prefix + std::to_string(i));
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    g.add_edge(i, j);
    g.add_edge(i, j);
  }
  return g;
}

/// G minus one vertex and all links incident to it; ids of surviving links
/// are preserved.
inline MixedGraph delete_vertex(const MixedGraph& g, VertexId v) {
  MixedGraph out;
  for (VertexId u = 0; u < g.n(); ++u)
    if (u != v) out.add_vertex(g.name(u));
  for (const auto& e : g.edges())
    if (e.a != v && e.b != v) out.add_edge_with_id(out.vertex(g.name(e.a)), out.vertex(g.name(e.b)), e.id);
  for (const auto& a : g.arcs())
    if (a.tail != v && a.head != v)
      out.add_arc_with_id(out.vertex(g.name(a.tail)), out.vertex(g.name(a.head)), a.id, a.from_edge);
  return out;
}

}  // namespace orientkit
