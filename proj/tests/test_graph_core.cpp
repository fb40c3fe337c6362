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

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "orientkit/connectivity.hpp"
#include "orientkit/harness.hpp"
#include "orientkit/io.hpp"
#include "orientkit/mixed_graph.hpp"

using namespace orientkit;

TEST_CASE("loops are rejected at construction", "[graph-core]") {
  MixedGraph g;
  g.add_vertex("a");
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(0, 0), std::invalid_argument);
}

TEST_CASE("parallel links are permitted and keep distinct ids", "[graph-core]") {
  MixedGraph g;
  int e0 = g.add_edge("u", "v");
  int e1 = g.add_edge("u", "v");
  int a0 = g.add_arc("u", "v");
  int a1 = g.add_arc("u", "v");
  CHECK(e0 != e1);
  CHECK(a0 != a1);
  CHECK(g.edges().size() == 2);
  CHECK(g.arcs().size() == 2);
}

TEST_CASE("apply_orientation directs a single edge", "[graph-core]") {
  MixedGraph m;
  m.add_edge("u", "v");
  Orientation o;
  o.dir[0] = EdgeDir::forward;
  Digraph d = apply_orientation(m, o);
  REQUIRE(d.arcs().size() == 1);
  CHECK(d.name(d.arcs()[0].tail) == "u");
  CHECK(d.name(d.arcs()[0].head) == "v");
  CHECK(d.arcs()[0].from_edge == 0);
}

TEST_CASE("apply_orientation keeps original arc ids and adds oriented edges", "[graph-core]") {
  MixedGraph m;
  m.add_arc("p", "q");
  m.add_edge("p", "q");
  Orientation o;
  o.dir[0] = EdgeDir::backward;  // q -> p
  Digraph d = apply_orientation(m, o);
  REQUIRE(d.arcs().size() == 2);
  CHECK(d.arc(0).tail == d.vertex("p"));
  CHECK(d.arc(0).from_edge == -1);
  const Arc& oriented = d.arcs()[1];
  CHECK(d.name(oriented.tail) == "q");
  CHECK(d.name(oriented.head) == "p");
  CHECK(oriented.from_edge == 0);
  CHECK(is_strongly_connected(d));
}

TEST_CASE("apply_orientation rejects partial orientations naming the edge", "[graph-core]") {
  MixedGraph m;
  m.add_edge("u", "v");
  m.add_edge("v", "w");
  Orientation o;
  o.dir[0] = EdgeDir::forward;
  CHECK_THROWS_WITH(apply_orientation(m, o), Catch::Matchers::ContainsSubstring("1"));
  Orientation bad;
  bad.dir[0] = EdgeDir::forward;
  bad.dir[1] = EdgeDir::forward;
  bad.dir[7] = EdgeDir::forward;
  CHECK_THROWS_AS(apply_orientation(m, bad), std::invalid_argument);
}

TEST_CASE("apply_orientation preserves vertex set and link count", "[graph-core]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 2;
  spec.n_max = 7;
  spec.m_min = 0;
  spec.m_max = 12;
  spec.seed = 101;
  for (long long i = 0; i < 50; ++i) {
    MixedGraph m = gen_mixed(spec, i);
    Orientation o;
    for (const auto& e : m.edges()) o.dir[e.id] = (e.id % 2) ? EdgeDir::backward : EdgeDir::forward;
    Digraph d = apply_orientation(m, o);
    CHECK(d.vertex_names() == m.vertex_names());
    CHECK(d.arcs().size() == m.arcs().size() + m.edges().size());
  }
}

TEST_CASE("contract collapses everything into one vertex", "[graph-core]") {
  MixedGraph d;
  d.add_arc("u", "v");
  d.add_arc("v", "u");
  MixedGraph c = contract(d, std::vector<std::string>{"u", "v"}, "w");
  CHECK(c.n() == 1);
  CHECK(c.arcs().empty());
  CHECK(c.name(0) == "w");
}

TEST_CASE("contract redirects crossing arcs and keeps their ids", "[graph-core]") {
  MixedGraph d = oracles::make_digraph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  MixedGraph c = contract(d, std::vector<std::string>{"b", "c"}, "b");
  CHECK(c.n() == 2);
  REQUIRE(c.arcs().size() == 2);
  CHECK(c.name(c.arc(0).tail) == "a");
  CHECK(c.name(c.arc(0).head) == "b");
  CHECK(c.name(c.arc(2).tail) == "b");
  CHECK(c.name(c.arc(2).head) == "a");
}

TEST_CASE("contract validates its inputs", "[graph-core]") {
  MixedGraph d = oracles::make_digraph({{"a", "b"}, {"b", "c"}});
  CHECK_THROWS_AS(contract(d, std::vector<VertexId>{}, "x"), std::invalid_argument);
  CHECK_THROWS_AS(contract(d, std::vector<std::string>{"a", "b"}, "c"), std::invalid_argument);
}

TEST_CASE("contracting any set of a strong digraph stays strong", "[graph-core][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 3;
  spec.n_max = 7;
  spec.m_min = 4;
  spec.m_max = 18;
  spec.seed = 500;
  Rng rng(7);
  int checked = 0;
  for (long long i = 0; i < 400 && checked < 100; ++i) {
    Digraph d = gen_digraph(spec, i);
    if (!is_strongly_connected(d)) continue;
    std::vector<VertexId> s;
    for (VertexId v = 0; v < d.n(); ++v)
      if (rng.coin()) s.push_back(v);
    if (s.empty()) s.push_back(rng.range(0, d.n() - 1));
    MixedGraph c = contract(d, s, "merged");
    CHECK(is_strongly_connected(c));
    // Bookkeeping: every surviving arc id maps to exactly one input arc.
    std::set<int> input_ids;
    for (const auto& a : d.arcs()) input_ids.insert(a.id);
    std::set<int> seen;
    for (const auto& a : c.arcs()) {
      CHECK(input_ids.count(a.id) == 1);
      CHECK(seen.insert(a.id).second);
    }
    ++checked;
  }
  REQUIRE(checked == 100);
}

TEST_CASE("blow_up reattaches edges into H", "[graph-core]") {
  Graph g = oracles::make_graph({{"a", "b"}, {"a", "v"}, {"b", "v"}});
  Graph h = double_cycle(3, "v");
  std::map<int, std::string> attach{{1, "v1"}, {2, "v2"}};
  Graph out = blow_up(g, "v", h, attach);
  CHECK(out.n() == 5);
  CHECK(out.edges().size() == 9);  // a-b untouched, 2 reattached, 6 cycle edges
  // reattached edges keep their ids and their surviving endpoint
  CHECK(out.name(out.edge(1).a) == "a");
  CHECK(out.name(out.edge(1).b) == "v1");
  CHECK(out.name(out.edge(2).a) == "b");
  CHECK(out.name(out.edge(2).b) == "v2");
}

TEST_CASE("blow_up validates the attach map", "[graph-core]") {
  Graph g = oracles::make_graph({{"a", "v"}, {"b", "v"}});
  Graph h = double_cycle(3, "c");
  CHECK_THROWS_AS(blow_up(g, "v", h, {{0, "c0"}}), std::invalid_argument);           // missing edge 1
  CHECK_THROWS_AS(blow_up(g, "v", h, {{0, "c0"}, {1, "zz"}}), std::invalid_argument);  // bad target
}

TEST_CASE("blow_up then contract recovers the original structure", "[graph-core]") {
  Graph g = oracles::make_graph({{"a", "b"}, {"a", "v"}, {"b", "v"}, {"a", "v"}});
  Graph h = double_cycle(3, "h");
  std::map<int, std::string> attach{{1, "h0"}, {2, "h1"}, {3, "h1"}};
  Graph blown = blow_up(g, "v", h, attach);
  MixedGraph back = contract(blown, std::vector<std::string>{"h0", "h1", "h2"}, "v");

  std::set<std::string> names_before(g.vertex_names().begin(), g.vertex_names().end());
  std::set<std::string> names_after(back.vertex_names().begin(), back.vertex_names().end());
  CHECK(names_before == names_after);
  // H's internal edges became loops and vanished; the original edges are
  // back, same ids, same endpoints.
  REQUIRE(back.edges().size() == g.edges().size());
  for (const auto& e : g.edges()) {
    const Edge& r = back.edge(e.id);
    CHECK(back.name(r.a) == g.name(e.a));
    CHECK(back.name(r.b) == g.name(e.b));
  }
}

TEST_CASE("blowing up preserves 4-edge-connectivity of 4-edge-connected parts", "[graph-core]") {
  // Both G and H 4-edge-connected: so is the blow-up.
  Graph g = double_cycle(3, "g");
  Graph h = double_cycle(3, "h");
  VertexId v = g.vertex("g0");
  std::map<int, std::string> attach;
  int slot = 0;
  for (int eid : g.incident_edges(v)) attach[eid] = "h" + std::to_string(slot++ / 2);
  Graph out = blow_up(g, "g0", h, attach);
  auto brute = oracles::brute_edge_connectivity(out);
  CHECK_FALSE(brute.infinite);
  CHECK(brute.value == 4);
}

TEST_CASE("blow_up degree contract: attach routes at most its count to each H vertex", "[graph-core][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 3;
  spec.n_max = 6;
  spec.m_min = 2;
  spec.m_max = 10;
  spec.seed = 321;
  Rng rng(13);
  for (long long i = 0; i < 60; ++i) {
    Graph g = gen_graph(spec, i);
    VertexId v = rng.range(0, g.n() - 1);
    Graph h = double_cycle(3, "hh");
    std::map<int, std::string> attach;
    std::map<std::string, int> routed;
    for (int eid : g.incident_edges(v)) {
      std::string target = "hh" + std::to_string(rng.range(0, 2));
      attach[eid] = target;
      routed[target]++;
    }
    Graph out = blow_up(g, g.name(v), h, attach);
    for (const auto& [nm, cnt] : routed) {
      int gained = out.edge_degree(out.vertex(nm)) - h.edge_degree(h.vertex(nm));
      CHECK(gained <= cnt);
    }
  }
}

TEST_CASE("double_cycle shapes", "[graph-core]") {
  Graph d3 = double_cycle(3);
  CHECK(d3.n() == 3);
  CHECK(d3.edges().size() == 6);
  auto brute = oracles::brute_edge_connectivity(d3);
  CHECK(brute.value == 4);

  Graph d2 = double_cycle(2);
  CHECK(d2.n() == 2);
  CHECK(d2.edges().size() == 4);

  Graph d5 = double_cycle(5);
  for (VertexId v = 0; v < d5.n(); ++v) CHECK(d5.edge_degree(v) == 4);

  CHECK_THROWS_AS(double_cycle(1), std::invalid_argument);
}

TEST_CASE("subset degree identities", "[graph-core][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 2;
  spec.n_max = 7;
  spec.m_min = 0;
  spec.m_max = 14;
  spec.seed = 99;
  Rng rng(5);
  for (long long i = 0; i < 80; ++i) {
    MixedGraph g = gen_mixed(spec, i);
    std::vector<bool> x(g.n(), false);
    for (VertexId v = 0; v < g.n(); ++v) x[v] = rng.coin();
    std::vector<bool> comp(g.n());
    for (VertexId v = 0; v < g.n(); ++v) comp[v] = !x[v];

    int crossing = 0;
    for (const auto& a : g.arcs()) crossing += (x[a.tail] != x[a.head]);
    CHECK(d_A_in(g, x) + d_A_out(g, x) == crossing);
    CHECK(d_E(g, x) == d_E(g, comp));
    CHECK(d_A_in(g, x) == d_A_out(g, comp));
  }
}

TEST_CASE("mg round trip", "[io]") {
  std::string text = "v a\nv b\nv c\ne a b\ne b c\na c a\n";
  std::istringstream in(text);
  MixedGraph g = read_mg(in);
  CHECK(g.n() == 3);
  CHECK(g.edges().size() == 2);
  CHECK(g.arcs().size() == 1);
  CHECK(to_mg_string(g) == text);
}

TEST_CASE("mg parser diagnostics", "[io]") {
  std::istringstream loop("e a a\n");
  CHECK_THROWS_AS(read_mg(loop), ParseError);
  std::istringstream junk("q a b\n");
  CHECK_THROWS_AS(read_mg(junk), ParseError);
  std::istringstream arity("e a\n");
  CHECK_THROWS_AS(read_mg(arity), ParseError);
  std::istringstream comments("# header\ne a b # trailing\n");
  MixedGraph g = read_mg(comments);
  CHECK(g.edges().size() == 1);
}

TEST_CASE("or round trip and validation", "[io]") {
  MixedGraph g = oracles::make_graph({{"a", "b"}, {"b", "c"}});
  Orientation o;
  o.dir[0] = EdgeDir::backward;
  o.dir[1] = EdgeDir::forward;
  std::string text = to_or_string(o, g);
  std::istringstream in(text);
  Orientation back = read_or(in, g);
  CHECK(back == o);

  std::istringstream wrong("o 0 a c\no 1 b c\n");
  CHECK_THROWS_AS(read_or(wrong, g), ParseError);
  std::istringstream twice("o 0 a b\no 0 b a\no 1 b c\n");
  CHECK_THROWS_AS(read_or(twice, g), ParseError);
  std::istringstream missing("o 0 a b\n");
  CHECK_THROWS_AS(read_or(missing, g), ParseError);
}

TEST_CASE("orientation io is stable under round trip on random graphs", "[io][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 2;
  spec.n_max = 6;
  spec.m_min = 1;
  spec.m_max = 10;
  spec.seed = 777;
  for (long long i = 0; i < 40; ++i) {
    MixedGraph g = gen_graph(spec, i);
    std::istringstream in(to_mg_string(g));
    MixedGraph back = read_mg(in);
    CHECK(back == g);
    Orientation o;
    for (const auto& e : g.edges()) o.dir[e.id] = (e.id % 3 == 0) ? EdgeDir::backward : EdgeDir::forward;
    std::istringstream oin(to_or_string(o, g));
    CHECK(read_or(oin, g) == o);
  }
}
