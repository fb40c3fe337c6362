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

#include "oracles.hpp"
#include "orientkit/harness.hpp"
#include "orientkit/t_orient.hpp"

using namespace orientkit;

namespace {

MixedGraph opposite_triangles() {
  return oracles::make_digraph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"b", "a"}, {"c", "b"}, {"a", "c"}});
}

Graph two_double_triangles_sharing(const std::string& shared) {
  Graph g;
  for (const char* pair : {"ab", "bs", "sa"})
    for (int k = 0; k < 2; ++k)
      g.add_edge(std::string(1, pair[0]) == "s" ? shared : std::string(1, pair[0]),
                 std::string(1, pair[1]) == "s" ? shared : std::string(1, pair[1]));
  for (const char* pair : {"cd", "ds", "sc"})
    for (int k = 0; k < 2; ++k)
      g.add_edge(std::string(1, pair[0]) == "s" ? shared : std::string(1, pair[0]),
                 std::string(1, pair[1]) == "s" ? shared : std::string(1, pair[1]));
  return g;
}

std::vector<VertexId> all_vertices(const MixedGraph& g) {
  std::vector<VertexId> t(g.n());
  for (VertexId v = 0; v < g.n(); ++v) t[v] = v;
  return t;
}

}  // namespace

TEST_CASE("2T-connectivity checker", "[t-orient]") {
  MixedGraph ot = opposite_triangles();
  CHECK(is_2T_connected(ot, all_vertices(ot)).holds);
  CHECK(is_2T_connected(ot, {}).holds);

  MixedGraph weak = oracles::make_digraph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto r = is_2T_connected(weak, {});
  CHECK_FALSE(r.holds);  // every vertex has in-degree 1
  REQUIRE(r.cut);
  CHECK(r.cut->value < 2);
}

TEST_CASE("characterization predicate with witnesses", "[t-orient]") {
  Graph dc = double_cycle(3);
  CHECK(huoh_predicate(dc, all_vertices(dc)).holds);

  Graph shared = two_double_triangles_sharing("v");
  auto bad = huoh_predicate(shared, {shared.vertex("v")});
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.vertex);
  CHECK(*bad.vertex == "v");

  std::vector<VertexId> rest;
  for (VertexId u = 0; u < shared.n(); ++u)
    if (shared.name(u) != "v") rest.push_back(u);
  CHECK(huoh_predicate(shared, rest).holds);
}

TEST_CASE("blow-up sizes follow max(3, ceil(deg/2))", "[t-orient]") {
  // degree 6 vertex -> 3-vertex cycle, each taking exactly 2 edges
  Graph g6;
  for (int i = 0; i < 6; ++i) g6.add_edge("hub", "leaf" + std::to_string(i));
  auto r6 = build_blowup(g6, [&] {
    std::vector<VertexId> t;
    for (VertexId v = 0; v < g6.n(); ++v)
      if (g6.name(v) != "hub") t.push_back(v);
    return t;
  }());
  REQUIRE(r6.map.size_of.at("hub") == 3);
  for (const auto& nm : r6.map.cycle_of.at("hub")) {
    int reattached = 0;
    for (const auto& e : g6.edges()) {
      auto ends = r6.map.reattach.at(e.id);
      reattached += (ends.first == nm) + (ends.second == nm);
    }
    CHECK(reattached == 2);
  }

  // degree 3 vertex -> still 3 cycle vertices, loads 2+1+0
  Graph g3;
  for (int i = 0; i < 3; ++i) g3.add_edge("hub", "leaf" + std::to_string(i));
  auto r3 = build_blowup(g3, [&] {
    std::vector<VertexId> t;
    for (VertexId v = 0; v < g3.n(); ++v)
      if (g3.name(v) != "hub") t.push_back(v);
    return t;
  }());
  CHECK(r3.map.size_of.at("hub") == 3);
  std::vector<int> loads;
  for (const auto& nm : r3.map.cycle_of.at("hub")) {
    int reattached = 0;
    for (const auto& e : g3.edges()) {
      auto ends = r3.map.reattach.at(e.id);
      reattached += (ends.first == nm) + (ends.second == nm);
    }
    loads.push_back(reattached);
  }
  CHECK(loads == std::vector<int>{2, 1, 0});
}

TEST_CASE("blow-up with T = V changes nothing", "[t-orient]") {
  Graph dc = double_cycle(3);
  auto r = build_blowup(dc, all_vertices(dc));
  CHECK(r.h == dc);
  CHECK(r.map.cycle_of.empty());
}

TEST_CASE("every cycle vertex carries at most 2 reattached edges", "[t-orient][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 3;
  spec.n_max = 6;
  spec.m_min = 1;
  spec.m_max = 14;
  spec.seed = 9090;
  for (long long i = 0; i < 80; ++i) {
    auto [g, t] = gen_graph_with_t(spec, i);
    auto r = build_blowup(g, t);
    for (const auto& [orig, cyc] : r.map.cycle_of) {
      CHECK(static_cast<int>(cyc.size()) == std::max(3, (g.degree(g.vertex(orig)) + 1) / 2));
      for (const auto& nm : cyc) {
        int reattached = 0;
        for (const auto& e : g.edges()) {
          auto ends = r.map.reattach.at(e.id);
          reattached += (ends.first == nm) + (ends.second == nm);
        }
        CHECK(reattached <= 2);
      }
    }
  }
}

TEST_CASE("claim 1: the blow-up of a qualifying pair satisfies thomassen", "[t-orient][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 3;
  spec.n_max = 6;
  spec.m_min = 6;
  spec.m_max = 14;
  spec.seed = 111;
  spec.filter = CorpusSpec::Filter::huoh;
  for (long long i = 0; i < 40; ++i) {
    auto [g, t] = gen_graph_with_t(spec, i);
    REQUIRE(huoh_predicate(g, t).holds);
    auto r = build_blowup(g, t);
    CHECK(claim1_check(r.h));
  }
}

TEST_CASE("pipeline succeeds on the double triangle", "[t-orient]") {
  Graph dc = double_cycle(3);
  auto out = construct_2T_orientation(dc, all_vertices(dc));
  REQUIRE(out.status == SearchStatus::found);
  CHECK(is_2T_connected(apply_orientation(dc, *out.orientation), all_vertices(dc)).holds);
}

TEST_CASE("pipeline reports the violated vertex", "[t-orient]") {
  Graph shared = two_double_triangles_sharing("v");
  auto out = construct_2T_orientation(shared, {shared.vertex("v")});
  CHECK(out.status == SearchStatus::none);
  REQUIRE(out.vertex_witness);
  CHECK(*out.vertex_witness == "v");
}

TEST_CASE("pipeline rejects thin graphs", "[t-orient]") {
  Graph c4 = oracles::make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  auto out = construct_2T_orientation(c4, {});
  CHECK(out.status == SearchStatus::none);
  REQUIRE(out.cut_witness);
  CHECK(out.cut_witness->value < 4);
}

TEST_CASE("pipeline equivalence and contraction preservation", "[t-orient][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 3;
  spec.n_max = 6;
  spec.m_min = 1;
  spec.m_max = 14;
  spec.seed = 2025;
  for (long long i = 0; i < 100; ++i) {
    auto [g, t] = gen_graph_with_t(spec, i);
    bool expected = huoh_predicate(g, t).holds;
    auto out = construct_2T_orientation(g, t);
    REQUIRE(out.status != SearchStatus::unknown);
    CHECK((out.status == SearchStatus::found) == expected);
    if (out.status != SearchStatus::found) continue;
    CHECK(is_2T_connected(apply_orientation(g, *out.orientation), t).holds);

    // Re-walk the pipeline stepwise: both target properties survive every
    // single contraction.
    std::vector<bool> in_t = vertex_mask(g, t);
    bool t_is_all = true;
    for (VertexId v = 0; v < g.n(); ++v) t_is_all = t_is_all && in_t[v];
    if (t_is_all) continue;
    auto blown = build_blowup(g, t);
    auto inner = exact_orientation_search(blown.h, TargetSpec::two_vertex());
    REQUIRE(inner.status == SearchStatus::found);
    Digraph d = apply_orientation(blown.h, *inner.orientation);
    for (const auto& [vname, cyc] : blown.map.cycle_of) {
      d = contract(d, cyc, vname);
      CHECK(arc_connectivity(d).at_least(2));
      detail::DigraphView view(d);
      for (VertexId v : t)
        if (d.has_vertex(g.name(v))) CHECK(view.strongly_connected(d.vertex(g.name(v))));
    }
  }
}

TEST_CASE("success is monotone under shrinking T", "[t-orient][property]") {
  CorpusSpec spec;
  spec.count = 1;
  spec.n_min = 3;
  spec.n_max = 6;
  spec.m_min = 6;
  spec.m_max = 14;
  spec.seed = 515;
  spec.filter = CorpusSpec::Filter::huoh;
  Rng rng(99);
  for (long long i = 0; i < 25; ++i) {
    auto [g, t] = gen_graph_with_t(spec, i);
    REQUIRE(construct_2T_orientation(g, t).status == SearchStatus::found);
    std::vector<VertexId> sub;
    for (VertexId v : t)
      if (rng.coin()) sub.push_back(v);
    CHECK(construct_2T_orientation(g, sub).status == SearchStatus::found);
  }
}
