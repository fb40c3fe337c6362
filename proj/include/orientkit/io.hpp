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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orientkit/mixed_graph.hpp"

namespace orientkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Mixed-graph text format (".mg"): line-oriented, UTF-8, '#' comments.
//   v NAME    optional explicit declaration (vertices auto-declared on use)
//   e U V     undirected edge; edge id = running count of 'e' lines from 0
//   a U V     arc U -> V;     arc id  = running count of 'a' lines from 0

inline MixedGraph read_mg(std::istream& in) {
  MixedGraph g;
  std::string line;
  int lineno = 0;
  int edge_count = 0;
  int arc_count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    try {
      if (toks[0] == "v") {
        if (toks.size() != 2) throw ParseError("expected 'v NAME'", lineno);
        g.add_vertex(toks[1]);
      } else if (toks[0] == "e") {
        if (toks.size() != 3) throw ParseError("expected 'e U V'", lineno);
        VertexId a = g.add_vertex(toks[1]);
        VertexId b = g.add_vertex(toks[2]);
        g.add_edge_with_id(a, b, edge_count++);
      } else if (toks[0] == "a") {
        if (toks.size() != 3) throw ParseError("expected 'a U V'", lineno);
        VertexId t = g.add_vertex(toks[1]);
        VertexId h = g.add_vertex(toks[2]);
        g.add_arc_with_id(t, h, arc_count++);
      } else {
        throw ParseError("unknown directive '" + toks[0] + "'", lineno);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return g;
}

/// Writes the graph with vertices in insertion order and links in id order.
/// Ids are positional in the format, so the written ids match the stored
/// ones exactly when they are contiguous from 0 (true for every graph this
/// toolkit serializes).
inline void write_mg(const MixedGraph& g, std::ostream& out) {
  for (const auto& nm : g.vertex_names()) out << "v " << nm << "\n";
  std::vector<Edge> es = g.edges();
  std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (const auto& e : es) out << "e " << g.name(e.a) << " " << g.name(e.b) << "\n";
  std::vector<Arc> as = g.arcs();
  std::sort(as.begin(), as.end(), [](const Arc& x, const Arc& y) { return x.id < y.id; });
  for (const auto& a : as) out << "a " << g.name(a.tail) << " " << g.name(a.head) << "\n";
}

inline std::string to_mg_string(const MixedGraph& g) {
  std::ostringstream os;
  write_mg(g, os);
  return os.str();
}

inline MixedGraph read_mg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_mg(in);
}

inline void write_mg_file(const MixedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_mg(g, out);
}

// ---------------------------------------------------------------------------
// Orientation text format (".or"): one line 'o EDGEID U V' per edge, meaning
// edge EDGEID is oriented U -> V. Every edge id appears exactly once.

inline Orientation read_or(std::istream& in, const MixedGraph& g) {
  Orientation o;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] != "o" || toks.size() != 4) throw ParseError("expected 'o EDGEID U V'", lineno);
    int id;
    try {
      id = std::stoi(toks[1]);
    } catch (const std::exception&) {
      throw ParseError("bad edge id '" + toks[1] + "'", lineno);
    }
    if (!g.has_edge_id(id)) throw ParseError("edge id " + std::to_string(id) + " not in graph", lineno);
    if (o.dir.count(id)) throw ParseError("edge id " + std::to_string(id) + " oriented twice", lineno);
    const Edge& e = g.edge(id);
    const std::string& u = toks[2];
    const std::string& v = toks[3];
    if (u == g.name(e.a) && v == g.name(e.b))
      o.dir[id] = EdgeDir::forward;
    else if (u == g.name(e.b) && v == g.name(e.a))
      o.dir[id] = EdgeDir::backward;
    else
      throw ParseError("endpoints '" + u + " " + v + "' do not match edge " + std::to_string(id), lineno);
  }
  if (o.dir.size() != g.edges().size()) {
    for (const auto& e : g.edges())
      if (!o.dir.count(e.id))
        throw ParseError("orientation missing edge id " + std::to_string(e.id), lineno);
  }
  return o;
}

inline void write_or(const Orientation& o, const MixedGraph& g, std::ostream& out) {
  for (const auto& [id, dir] : o.dir) {
    const Edge& e = g.edge(id);
    if (dir == EdgeDir::forward)
      out << "o " << id << " " << g.name(e.a) << " " << g.name(e.b) << "\n";
    else
      out << "o " << id << " " << g.name(e.b) << " " << g.name(e.a) << "\n";
  }
}

inline std::string to_or_string(const Orientation& o, const MixedGraph& g) {
  std::ostringstream os;
  write_or(o, g, os);
  return os.str();
}

inline Orientation read_or_file(const std::string& path, const MixedGraph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_or(in, g);
}

inline void write_or_file(const Orientation& o, const MixedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_or(o, g, out);
}

}  // namespace orientkit
