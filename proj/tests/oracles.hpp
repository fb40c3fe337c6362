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

// Test-only oracles: independent routes for the quantities the library
// computes with flows and pruned search. Everything here enumerates.

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "orientkit/mixed_graph.hpp"

namespace oracles {

using orientkit::MixedGraph;
using orientkit::Orientation;

struct BruteCut {
  bool infinite = false;
  int value = 0;
  std::vector<bool> argmin;  // minimizing subset mask, when finite
};

/// min over nonempty proper X of d_E(X), by enumerating all 2^n - 2 subsets.
inline BruteCut brute_edge_connectivity(const MixedGraph& g) {
  int n = g.n();
  if (n <= 1) return {true, 0, {}};
  BruteCut best{false, std::numeric_limits<int>::max(), {}};
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<bool> x(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    int v = orientkit::d_E(g, x);
    if (v < best.value) {
      best.value = v;
      best.argmin = x;
    }
  }
  return best;
}

/// min over nonempty proper X of d_A^-(X), likewise.
inline BruteCut brute_arc_connectivity(const MixedGraph& d) {
  int n = d.n();
  if (n <= 1) return {true, 0, {}};
  BruteCut best{false, std::numeric_limits<int>::max(), {}};
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<bool> x(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    int v = orientkit::d_A_in(d, x);
    if (v < best.value) {
      best.value = v;
      best.argmin = x;
    }
  }
  return best;
}

/// Visits all 2^|E| total orientations of m (edge i of m.edges() is bit i).
inline void for_each_orientation(const MixedGraph& m, const std::function<void(const Orientation&)>& fn) {
  const auto& es = m.edges();
  if (es.size() > 25) throw std::invalid_argument("too many edges for exhaustive orientation");
  for (std::uint64_t mask = 0; mask < (1ull << es.size()); ++mask) {
    Orientation o;
    for (std::size_t i = 0; i < es.size(); ++i)
      o.dir[es[i].id] = (mask >> i) & 1 ? orientkit::EdgeDir::backward : orientkit::EdgeDir::forward;
    fn(o);
  }
}

inline long long count_orientations(const MixedGraph& m, const std::function<bool(const Orientation&)>& pred) {
  long long count = 0;
  for_each_orientation(m, [&](const Orientation& o) { count += pred(o); });
  return count;
}

// Small construction helpers for test fixtures.

inline MixedGraph make_graph(std::initializer_list<std::pair<const char*, const char*>> edges) {
  MixedGraph g;
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline MixedGraph make_digraph(std::initializer_list<std::pair<const char*, const char*>> arcs) {
  MixedGraph d;
  for (auto [a, b] : arcs) d.add_arc(a, b);
  return d;
}

}  // namespace oracles
