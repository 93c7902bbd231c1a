#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermspec/gaussian.hpp"

namespace hermspec {

/// Orientation of the pair {u, v} with u < v: Undirected is a two-way edge,
/// Forward the arc u -> v, Backward the arc v -> u.
enum class EdgeKind : std::uint8_t { Undirected, Forward, Backward };

struct Edge {
  int u;
  int v;
  EdgeKind kind;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.kind == b.kind;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.kind < b.kind;
  }
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A mixed graph: vertices 0..n-1, a set of undirected edges and arcs over
/// distinct unordered pairs. No self-loops, at most one edge per pair.
/// Immutable after construction; deletions return new graphs.
class MixedGraph {
 public:
  MixedGraph() = default;

  MixedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw Error("MixedGraph: negative vertex count");
    for (auto& e : edges_) {
      if (e.u > e.v) {
        std::swap(e.u, e.v);
        if (e.kind == EdgeKind::Forward)
          e.kind = EdgeKind::Backward;
        else if (e.kind == EdgeKind::Backward)
          e.kind = EdgeKind::Forward;
      }
      if (e.u == e.v) throw Error("MixedGraph: self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n_) throw Error("MixedGraph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw Error("MixedGraph: duplicate edge {" + std::to_string(edges_[i].u) + "," +
                    std::to_string(edges_[i].v) + "}");
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// The edge on the unordered pair {a, b}, if present.
  std::optional<Edge> edge_between(int a, int b) const {
    int u = std::min(a, b), v = std::max(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, EdgeKind::Undirected},
                               [](const Edge& x, const Edge& y) {
                                 return x.u != y.u ? x.u < y.u : x.v < y.v;
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return *it;
    return std::nullopt;
  }

  bool adjacent(int a, int b) const { return edge_between(a, b).has_value(); }

  /// Neighbors in the underlying graph, ascending.
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
      if (e.u == v) out.push_back(e.v);
      if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
      if (e.u == v || e.v == v) ++d;
    return d;
  }

  /// Underlying-graph adjacency rows as bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_rows() const {
    if (n_ > 64) throw Error("adjacency_rows: graph too large for bitmask rows");
    std::vector<std::uint64_t> rows(static_cast<size_t>(n_), 0);
    for (const auto& e : edges_) {
      rows[static_cast<size_t>(e.u)] |= std::uint64_t(1) << e.v;
      rows[static_cast<size_t>(e.v)] |= std::uint64_t(1) << e.u;
    }
    return rows;
  }

  bool is_undirected() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.kind == EdgeKind::Undirected; });
  }

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const MixedGraph& a, const MixedGraph& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Parses the plain-text graph format: optional '#' comment lines, a header
/// "v <n>", then one edge per line, "a -- b" (undirected) or "a -> b" (arc).
/// Errors carry 1-based line numbers.
inline MixedGraph parse_mixed_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> seen;

  auto parse_index = [&](const std::string& tok) -> int {
    size_t pos = 0;
    int value;
    try {
      value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected a vertex index, got '" + tok + "'");
    }
    if (pos != tok.size() || value < 0)
      throw ParseError(lineno, "expected a vertex index, got '" + tok + "'");
    return value;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (tok[0] == '#') continue;
    if (!have_header) {
      if (tok != "v") throw ParseError(lineno, "expected header 'v <n>'");
      std::string num;
      if (!(ls >> num)) throw ParseError(lineno, "expected vertex count after 'v'");
      n = parse_index(num);
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
      have_header = true;
      continue;
    }
    std::string op, btok, extra;
    if (!(ls >> op >> btok)) throw ParseError(lineno, "expected '<a> -- <b>' or '<a> -> <b>'");
    if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
    int a = parse_index(tok);
    int b = parse_index(btok);
    if (a >= n || b >= n)
      throw ParseError(lineno, "vertex index " + std::to_string(std::max(a, b)) +
                                   " out of range (n = " + std::to_string(n) + ")");
    if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    for (const auto& s : seen)
      if (s == key)
        throw ParseError(lineno, "duplicate edge {" + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + "}");
    seen.push_back(key);
    if (op == "--")
      edges.push_back({a, b, EdgeKind::Undirected});
    else if (op == "->")
      edges.push_back({a, b, EdgeKind::Forward});
    else
      throw ParseError(lineno, "unknown edge operator '" + op + "'");
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 'v <n>'");
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    Edge c = e;
    if (c.u > c.v) {
      std::swap(c.u, c.v);
      c.kind = c.kind == EdgeKind::Forward ? EdgeKind::Backward : EdgeKind::Forward;
    }
    canon.push_back(c);
  }
  return MixedGraph(n, std::move(canon));
}

/// Serializes in the same format, edges sorted by (min, max). Arcs are
/// written tail -> head. parse(serialize(D)) == D.
inline std::string serialize_mg(const MixedGraph& D) {
  std::ostringstream out;
  out << "v " << D.num_vertices() << "\n";
  for (const auto& e : D.edges()) {
    switch (e.kind) {
      case EdgeKind::Undirected:
        out << e.u << " -- " << e.v << "\n";
        break;
      case EdgeKind::Forward:
        out << e.u << " -> " << e.v << "\n";
        break;
      case EdgeKind::Backward:
        out << e.v << " -> " << e.u << "\n";
        break;
    }
  }
  return out.str();
}

/// Forgets orientations.
inline MixedGraph underlying(const MixedGraph& D) {
  std::vector<Edge> edges = D.edges();
  for (auto& e : edges) e.kind = EdgeKind::Undirected;
  return MixedGraph(D.num_vertices(), std::move(edges));
}

struct VertexDeletion {
  MixedGraph graph;
  /// old_to_new[w] is the new index of vertex w, or -1 for the deleted one.
  std::vector<int> old_to_new;
};

inline VertexDeletion delete_vertex(const MixedGraph& D, int v) {
  if (v < 0 || v >= D.num_vertices()) throw Error("delete_vertex: vertex out of range");
  std::vector<int> map(static_cast<size_t>(D.num_vertices()), -1);
  int next = 0;
  for (int w = 0; w < D.num_vertices(); ++w)
    if (w != v) map[static_cast<size_t>(w)] = next++;
  std::vector<Edge> edges;
  for (const auto& e : D.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)], e.kind});
  }
  return {MixedGraph(D.num_vertices() - 1, std::move(edges)), std::move(map)};
}

/// Removes the edge on {a, b}; throws if no such edge exists.
inline MixedGraph delete_edge(const MixedGraph& D, int a, int b) {
  if (a < 0 || b < 0 || a >= D.num_vertices() || b >= D.num_vertices())
    throw Error("delete_edge: vertex out of range");
  int u = std::min(a, b), v = std::max(a, b);
  std::vector<Edge> edges;
  bool found = false;
  for (const auto& e : D.edges()) {
    if (e.u == u && e.v == v) {
      found = true;
      continue;
    }
    edges.push_back(e);
  }
  if (!found)
    throw Error("delete_edge: no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return MixedGraph(D.num_vertices(), std::move(edges));
}

/// Subgraph induced on the vertex set S, relabeled 0..|S|-1 in ascending
/// order of the original indices. S must be duplicate-free and in range.
inline MixedGraph induced_subgraph(const MixedGraph& D, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  for (size_t i = 0; i < S.size(); ++i) {
    if (S[i] < 0 || S[i] >= D.num_vertices())
      throw Error("induced_subgraph: vertex out of range");
    if (i > 0 && S[i] == S[i - 1]) throw Error("induced_subgraph: duplicate vertex in set");
  }
  std::vector<int> map(static_cast<size_t>(D.num_vertices()), -1);
  for (size_t i = 0; i < S.size(); ++i) map[static_cast<size_t>(S[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : D.edges()) {
    int mu = map[static_cast<size_t>(e.u)], mv = map[static_cast<size_t>(e.v)];
    if (mu >= 0 && mv >= 0) edges.push_back({mu, mv, e.kind});
  }
  return MixedGraph(static_cast<int>(S.size()), std::move(edges));
}

/// Connectivity of the underlying graph; the empty graph counts as connected.
inline bool is_connected(const MixedGraph& D) {
  int n = D.num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : D.edges()) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

/// Vertex sets of the connected components of the underlying graph, each
/// ascending, ordered by smallest member.
inline std::vector<std::vector<int>> components(const MixedGraph& D) {
  int n = D.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : D.edges()) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp, stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace hermspec
