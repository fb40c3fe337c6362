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

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orientkit/connectivity.hpp"
#include "orientkit/io.hpp"
#include "orientkit/mixed_graph.hpp"

namespace orientkit {

/// Monotone not-all-equal 3SAT instance: clauses are triples of distinct
/// positive variables (1-based), no negations representable.
struct NaeInstance {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Truth assignment, index i holds the value of variable i+1.
using TruthAssignment = std::vector<bool>;

/// True iff every clause has at least one true and at least one false literal.
inline bool nae_satisfied(const NaeInstance& phi, const TruthAssignment& f) {
  for (const auto& c : phi.clauses) {
    bool v0 = f[c[0] - 1], v1 = f[c[1] - 1], v2 = f[c[2] - 1];
    if (v0 == v1 && v1 == v2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// MNAE3SAT file format (".nae"):
//   c <comment>
//   p mnae <numVars> <numClauses>
//   <v1> <v2> <v3> 0        one clause per line, positive 1-based indices

inline NaeInstance parse_mnae(std::istream& in) {
  NaeInstance phi;
  bool have_header = false;
  int expected_clauses = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("duplicate header", lineno);
      if (toks.size() != 4 || toks[1] != "mnae") throw ParseError("expected 'p mnae <vars> <clauses>'", lineno);
      try {
        phi.num_vars = std::stoi(toks[2]);
        expected_clauses = std::stoi(toks[3]);
      } catch (const std::exception&) {
        throw ParseError("bad header counts", lineno);
      }
      if (phi.num_vars < 0 || expected_clauses < 0) throw ParseError("negative header counts", lineno);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before header", lineno);
    std::vector<int> lits;
    for (const auto& t : toks) {
      int v;
      try {
        v = std::stoi(t);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + t + "'", lineno);
      }
      if (v == 0) break;
      if (v < 0) throw ParseError("negated literal " + std::to_string(v) + " (instance must be monotone)", lineno);
      if (v > phi.num_vars) throw ParseError("variable " + std::to_string(v) + " out of range", lineno);
      lits.push_back(v);
    }
    if (toks.back() != "0") throw ParseError("clause not terminated by 0", lineno);
    if (lits.size() != 3) throw ParseError("clause must contain exactly 3 variables", lineno);
    if (lits[0] == lits[1] || lits[0] == lits[2] || lits[1] == lits[2])
      throw ParseError("repeated variable in clause", lineno);
    phi.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  if (!have_header) throw ParseError("missing 'p mnae' header", lineno == 0 ? 1 : lineno);
  if (static_cast<int>(phi.clauses.size()) != expected_clauses)
    throw ParseError("header announces " + std::to_string(expected_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()),
                     lineno == 0 ? 1 : lineno);
  return phi;
}

inline NaeInstance parse_mnae(const std::string& text) {
  std::istringstream is(text);
  return parse_mnae(is);
}

inline NaeInstance parse_mnae_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_mnae(in);
}

inline void write_mnae(const NaeInstance& phi, std::ostream& out) {
  out << "p mnae " << phi.num_vars << " " << phi.clauses.size() << "\n";
  for (const auto& c : phi.clauses) out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
}

inline std::string to_nae_string(const NaeInstance& phi) {
  std::ostringstream os;
  write_mnae(phi, os);
  return os.str();
}

/// First feasible assignment in lexicographic order (variable 1 most
/// significant, false before true), or nullopt after exhausting 2^|X|.
inline std::optional<TruthAssignment> nae_brute_force(const NaeInstance& phi) {
  if (phi.num_vars > 24) throw std::invalid_argument("nae_brute_force: more than 24 variables");
  int n = phi.num_vars;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    TruthAssignment f(n);
    for (int i = 0; i < n; ++i) f[i] = (mask >> (n - 1 - i)) & 1;
    if (nae_satisfied(phi, f)) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The reduction gadget.

/// The gadget mixed graph together with every index map the lemma machinery
/// needs: the Q vertices p,q,r; one z vertex per clause; per occurrence
/// (x,C) the four vertices t,u,w,y plus the z-u connector edge; and per
/// variable the cycle sequence b_1..b_{3mu+1} with its edge ids in order.
struct ReductionArtifact {
  NaeInstance phi;
  MixedGraph graph;
  VertexId p = -1, q = -1, r = -1;

  struct Gadget {
    VertexId t = -1, u = -1, w = -1, y = -1;
    int z_edge = -1;  // edge id of z_C - u_C^x
  };

  std::vector<VertexId> z_of;                      // per clause index (0-based)
  std::map<std::pair<int, int>, Gadget> gadgets;   // key (variable 1-based, clause 0-based)
  std::vector<std::vector<VertexId>> cycle_seq;    // per variable: b_1 .. b_{3mu+1}
  std::vector<std::vector<int>> cycle_edges;       // per variable: edge ids, last one closes the cycle

  const Gadget& gadget(int var, int clause_idx) const { return gadgets.at({var, clause_idx}); }
};

/// Builds the gadget for phi. Clause ordering C_1..C_mu(x) is file order.
/// Every variable must occur in at least one clause.
inline ReductionArtifact reduce(const NaeInstance& phi) {
  std::vector<std::vector<int>> occ(static_cast<std::size_t>(phi.num_vars));  // per var: clause indices
  for (int j = 0; j < static_cast<int>(phi.clauses.size()); ++j)
    for (int x : phi.clauses[j]) occ[x - 1].push_back(j);
  for (int x = 1; x <= phi.num_vars; ++x)
    if (occ[x - 1].empty())
      throw std::invalid_argument("variable " + std::to_string(x) + " occurs in no clause");

  ReductionArtifact art;
  art.phi = phi;
  MixedGraph& g = art.graph;

  auto zs = [](int j) { return "z_" + std::to_string(j + 1); };
  auto gv = [](const char* base, int x, int j) {
    return std::string(base) + "_" + std::to_string(x) + "_" + std::to_string(j + 1);
  };

  // Vertices: Q, then Z, then R_C^x in clause-major literal order.
  art.p = g.add_vertex("p");
  art.q = g.add_vertex("q");
  art.r = g.add_vertex("r");
  for (int j = 0; j < static_cast<int>(phi.clauses.size()); ++j) art.z_of.push_back(g.add_vertex(zs(j)));
  for (int j = 0; j < static_cast<int>(phi.clauses.size()); ++j) {
    for (int x : phi.clauses[j]) {
      ReductionArtifact::Gadget gd;
      gd.t = g.add_vertex(gv("t", x, j));
      gd.u = g.add_vertex(gv("u", x, j));
      gd.w = g.add_vertex(gv("w", x, j));
      gd.y = g.add_vertex(gv("y", x, j));
      art.gadgets.emplace(std::make_pair(x, j), gd);
    }
  }

  // Arcs: the Q tournament both ways, then p->z_C->q per clause, then the
  // walk p,t,u,y,u,w,q per occurrence.
  g.add_arc(art.p, art.q);
  g.add_arc(art.q, art.p);
  g.add_arc(art.p, art.r);
  g.add_arc(art.r, art.p);
  g.add_arc(art.q, art.r);
  g.add_arc(art.r, art.q);
  for (int j = 0; j < static_cast<int>(phi.clauses.size()); ++j) {
    g.add_arc(art.p, art.z_of[j]);
    g.add_arc(art.z_of[j], art.q);
  }
  for (int j = 0; j < static_cast<int>(phi.clauses.size()); ++j) {
    for (int x : phi.clauses[j]) {
      const auto& gd = art.gadget(x, j);
      g.add_arc(art.p, gd.t);
      g.add_arc(gd.t, gd.u);
      g.add_arc(gd.u, gd.y);
      g.add_arc(gd.y, gd.u);
      g.add_arc(gd.u, gd.w);
      g.add_arc(gd.w, art.q);
    }
  }

  // Edges: z_C - u_C^x per occurrence, then the variable cycles B^x with
  // b_1 = r and (y, w, t) per containing clause.
  for (int j = 0; j < static_cast<int>(phi.clauses.size()); ++j)
    for (int x : phi.clauses[j])
      art.gadgets.at({x, j}).z_edge = g.add_edge(art.z_of[j], art.gadget(x, j).u);

  art.cycle_seq.resize(phi.num_vars);
  art.cycle_edges.resize(phi.num_vars);
  for (int x = 1; x <= phi.num_vars; ++x) {
    auto& seq = art.cycle_seq[x - 1];
    seq.push_back(art.r);
    for (int j : occ[x - 1]) {
      const auto& gd = art.gadget(x, j);
      seq.push_back(gd.y);
      seq.push_back(gd.w);
      seq.push_back(gd.t);
    }
    auto& eids = art.cycle_edges[x - 1];
    for (std::size_t i = 0; i < seq.size(); ++i)
      eids.push_back(g.add_edge(seq[i], seq[(i + 1) % seq.size()]));
  }
  return art;
}

// ---------------------------------------------------------------------------
// Lemma 1 conditions.

struct Lemma1Report {
  bool holds1 = true, holds2 = true, holds3 = true;

  struct Violation {
    int condition;        // 1, 2 or 3
    std::string subject;  // "x<var>" or "C<clause>"
    std::string detail;
  };
  std::vector<Violation> violations;

  bool all() const { return holds1 && holds2 && holds3; }
};

namespace detail {

/// Direction of one cycle B^x under o: +1 all forward (b_i -> b_{i+1}),
/// -1 all backward, 0 mixed.
inline int cycle_direction(const ReductionArtifact& art, const Orientation& o, int var) {
  const auto& seq = art.cycle_seq[var - 1];
  const auto& eids = art.cycle_edges[var - 1];
  int sign = 0;
  for (std::size_t i = 0; i < eids.size(); ++i) {
    const Edge& e = art.graph.edge(eids[i]);
    VertexId from = seq[i];
    auto it = o.dir.find(e.id);
    if (it == o.dir.end()) throw std::invalid_argument("orientation missing cycle edge " + std::to_string(e.id));
    bool along = (it->second == EdgeDir::forward) ? (e.a == from) : (e.b == from);
    int s = along ? 1 : -1;
    if (sign == 0)
      sign = s;
    else if (sign != s)
      return 0;
  }
  return sign;
}

/// True iff the z-u connector of (x, C) is oriented from u toward z.
inline bool z_edge_from_u(const ReductionArtifact& art, const Orientation& o, int var, int clause_idx) {
  const auto& gd = art.gadget(var, clause_idx);
  const Edge& e = art.graph.edge(gd.z_edge);
  auto it = o.dir.find(e.id);
  if (it == o.dir.end()) throw std::invalid_argument("orientation missing z edge " + std::to_string(e.id));
  VertexId from = (it->second == EdgeDir::forward) ? e.a : e.b;
  return from == gd.u;
}

}  // namespace detail

/// Checks Lemma 1's three conditions on a total orientation of the gadget:
/// (1) every cycle B^x is a circuit one way or the other, (2) the z-u edge
/// points at z exactly when B^x runs forward, (3) every clause vertex z_C
/// has an oriented edge in and an oriented edge out.
inline Lemma1Report lemma1_check(const ReductionArtifact& art, const Orientation& o) {
  if (o.dir.size() != art.graph.edges().size())
    throw std::invalid_argument("orientation is not total on the gadget graph");

  Lemma1Report rep;
  std::vector<int> dir_of(static_cast<std::size_t>(art.phi.num_vars), 0);
  for (int x = 1; x <= art.phi.num_vars; ++x) {
    dir_of[x - 1] = detail::cycle_direction(art, o, x);
    if (dir_of[x - 1] == 0) {
      rep.holds1 = false;
      rep.violations.push_back({1, "x" + std::to_string(x), "cycle B^x is not oriented as a circuit"});
    }
  }
  for (const auto& [key, gd] : art.gadgets) {
    auto [x, j] = key;
    if (dir_of[x - 1] == 0) continue;  // condition (2) presupposes (1) for this variable
    bool from_u = detail::z_edge_from_u(art, o, x, j);
    bool fwd = dir_of[x - 1] > 0;
    if (from_u != fwd) {
      rep.holds2 = false;
      rep.violations.push_back({2, "x" + std::to_string(x),
                                "connector of clause " + std::to_string(j + 1) +
                                    (from_u ? " points at z but B^x runs backward"
                                            : " points at u but B^x runs forward")});
    }
  }
  for (int j = 0; j < static_cast<int>(art.phi.clauses.size()); ++j) {
    bool has_in = false, has_out = false;
    for (int x : art.phi.clauses[j]) {
      if (detail::z_edge_from_u(art, o, x, j))
        has_in = true;
      else
        has_out = true;
    }
    if (!has_in || !has_out) {
      rep.holds3 = false;
      rep.violations.push_back({3, "C" + std::to_string(j + 1),
                                has_in ? "no oriented edge leaves z_C" : "no oriented edge enters z_C"});
    }
  }
  return rep;
}

/// Lemma 2, forward direction: orient B^x forward iff f(x) = true and each
/// connector from u toward z iff f(x) = true. Conditions (1) and (2) hold by
/// construction; (3) holds exactly when f is feasible.
inline Orientation assignment_to_orientation(const ReductionArtifact& art, const TruthAssignment& f) {
  if (static_cast<int>(f.size()) != art.phi.num_vars)
    throw std::invalid_argument("assignment is not total on the instance's variables");

  Orientation o;
  for (int x = 1; x <= art.phi.num_vars; ++x) {
    const auto& seq = art.cycle_seq[x - 1];
    const auto& eids = art.cycle_edges[x - 1];
    for (std::size_t i = 0; i < eids.size(); ++i) {
      const Edge& e = art.graph.edge(eids[i]);
      VertexId from = f[x - 1] ? seq[i] : seq[(i + 1) % seq.size()];
      o.dir[e.id] = (e.a == from) ? EdgeDir::forward : EdgeDir::backward;
    }
  }
  for (const auto& [key, gd] : art.gadgets) {
    auto [x, j] = key;
    (void)j;
    const Edge& e = art.graph.edge(gd.z_edge);
    VertexId from = f[x - 1] ? gd.u : (e.a == gd.u ? e.b : e.a);
    o.dir[e.id] = (e.a == from) ? EdgeDir::forward : EdgeDir::backward;
  }
  return o;
}

/// Lemma 2, backward direction: f(x) = true iff B^x is oriented forward.
/// Requires condition (1); throws when some cycle direction is undefined.
inline TruthAssignment orientation_to_assignment(const ReductionArtifact& art, const Orientation& o) {
  TruthAssignment f(static_cast<std::size_t>(art.phi.num_vars));
  for (int x = 1; x <= art.phi.num_vars; ++x) {
    int s = detail::cycle_direction(art, o, x);
    if (s == 0)
      throw std::invalid_argument("cycle B^x of variable " + std::to_string(x) +
                                  " is not a circuit; no assignment extractable");
    f[x - 1] = s > 0;
  }
  return f;
}

/// Enumerates the orientations satisfying all three Lemma 1 conditions:
/// conditions (1)+(2) leave one free bit per variable (the cycle direction),
/// and (3) filters exactly the NAE-feasible combinations. Returns the count;
/// emits each orientation through the callback when given. With verify_2vc,
/// every emitted orientation is checked 2-vertex-connected.
inline long long enumerate_lemma1_orientations(
    const ReductionArtifact& art,
    const std::function<void(const TruthAssignment&, const Orientation&)>& emit = nullptr,
    bool verify_2vc = false) {
  if (art.phi.num_vars > 24) throw std::invalid_argument("enumerate_lemma1_orientations: more than 24 variables");
  int n = art.phi.num_vars;
  long long count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    TruthAssignment f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f[i] = (mask >> (n - 1 - i)) & 1;
    if (!nae_satisfied(art.phi, f)) continue;
    ++count;
    if (emit || verify_2vc) {
      Orientation o = assignment_to_orientation(art, f);
      if (verify_2vc && !is_2vertex_connected(apply_orientation(art.graph, o)))
        throw std::logic_error("feasible assignment produced a non-2-vertex-connected orientation");
      if (emit) emit(f, o);
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Sidecar index map (".map"): z / gadget / cycle lines, 1-based variable and
// clause numbers, enough to rebuild the artifact next to its ".mg" file.

inline void write_map(const ReductionArtifact& art, std::ostream& out) {
  const MixedGraph& g = art.graph;
  for (int j = 0; j < static_cast<int>(art.z_of.size()); ++j)
    out << "z " << (j + 1) << " " << g.name(art.z_of[j]) << "\n";
  for (const auto& [key, gd] : art.gadgets) {
    out << "gadget " << key.first << " " << (key.second + 1) << " " << g.name(gd.t) << " "
        << g.name(gd.u) << " " << g.name(gd.w) << " " << g.name(gd.y) << "\n";
  }
  for (int x = 1; x <= art.phi.num_vars; ++x) {
    out << "cycle " << x;
    for (VertexId v : art.cycle_seq[x - 1]) out << " " << g.name(v);
    out << "\n";
  }
}

inline void write_map_file(const ReductionArtifact& art, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_map(art, out);
}

namespace detail {

inline int find_edge_between(const MixedGraph& g, VertexId a, VertexId b, int lineno) {
  for (const auto& e : g.edges())
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.id;
  throw ParseError("no edge between '" + g.name(a) + "' and '" + g.name(b) + "'", lineno);
}

}  // namespace detail

/// Rebuilds a ReductionArtifact from a gadget graph and its sidecar map.
/// Edge ids are recovered by endpoint lookup, which is unambiguous in any
/// graph produced by reduce().
inline ReductionArtifact read_artifact(const MixedGraph& g, std::istream& map_in) {
  ReductionArtifact art;
  art.graph = g;
  art.p = g.vertex("p");
  art.q = g.vertex("q");
  art.r = g.vertex("r");

  struct RawGadget {
    int var, clause;
    std::string t, u, w, y;
  };
  std::vector<RawGadget> raw;
  std::map<int, std::string> z_names;
  std::map<int, std::vector<std::string>> cycles;

  std::string line;
  int lineno = 0;
  while (std::getline(map_in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    try {
      if (toks[0] == "z" && toks.size() == 3) {
        z_names[std::stoi(toks[1])] = toks[2];
      } else if (toks[0] == "gadget" && toks.size() == 7) {
        raw.push_back({std::stoi(toks[1]), std::stoi(toks[2]), toks[3], toks[4], toks[5], toks[6]});
      } else if (toks[0] == "cycle" && toks.size() >= 3) {
        auto& c = cycles[std::stoi(toks[1])];
        for (std::size_t i = 2; i < toks.size(); ++i) c.push_back(toks[i]);
      } else {
        throw ParseError("unrecognized map line", lineno);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }

  int num_clauses = z_names.empty() ? 0 : z_names.rbegin()->first;
  art.z_of.resize(static_cast<std::size_t>(num_clauses));
  for (const auto& [j, nm] : z_names) art.z_of[static_cast<std::size_t>(j - 1)] = g.vertex(nm);

  art.phi.num_vars = cycles.empty() ? 0 : cycles.rbegin()->first;
  art.phi.clauses.resize(static_cast<std::size_t>(num_clauses), {0, 0, 0});
  std::vector<int> fill(static_cast<std::size_t>(num_clauses), 0);
  std::sort(raw.begin(), raw.end(), [](const RawGadget& a, const RawGadget& b) {
    return std::tie(a.clause, a.var) < std::tie(b.clause, b.var);
  });
  for (const auto& rg : raw) {
    ReductionArtifact::Gadget gd;
    gd.t = g.vertex(rg.t);
    gd.u = g.vertex(rg.u);
    gd.w = g.vertex(rg.w);
    gd.y = g.vertex(rg.y);
    gd.z_edge = detail::find_edge_between(g, art.z_of[static_cast<std::size_t>(rg.clause - 1)], gd.u, 0);
    art.gadgets.emplace(std::make_pair(rg.var, rg.clause - 1), gd);
    int& slot = fill[static_cast<std::size_t>(rg.clause - 1)];
    if (slot >= 3) throw ParseError("more than 3 gadget lines for clause " + std::to_string(rg.clause), 0);
    art.phi.clauses[static_cast<std::size_t>(rg.clause - 1)][static_cast<std::size_t>(slot++)] = rg.var;
  }

  art.cycle_seq.resize(static_cast<std::size_t>(art.phi.num_vars));
  art.cycle_edges.resize(static_cast<std::size_t>(art.phi.num_vars));
  for (const auto& [x, names] : cycles) {
    auto& seq = art.cycle_seq[static_cast<std::size_t>(x - 1)];
    for (const auto& nm : names) seq.push_back(g.vertex(nm));
    auto& eids = art.cycle_edges[static_cast<std::size_t>(x - 1)];
    for (std::size_t i = 0; i < seq.size(); ++i)
      eids.push_back(detail::find_edge_between(g, seq[i], seq[(i + 1) % seq.size()], 0));
  }
  return art;
}

}  // namespace orientkit
