#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "hermspec/gaussian.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

/// A cycle of the underlying graph in canonical traversal order: the
/// smallest vertex comes first and the second vertex is smaller than the
/// last, which fixes both rotation and direction.
struct Cycle {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.verts == b.verts; }
  friend bool operator<(const Cycle& a, const Cycle& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.verts < b.verts;
  }
};

/// Rewrites an arbitrary traversal of a cycle (no repeated vertices, length
/// >= 3) into canonical form.
inline Cycle canonical_cycle(std::vector<int> verts) {
  if (verts.size() < 3) throw Error("canonical_cycle: fewer than 3 vertices");
  auto mn = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), mn, verts.end());
  for (size_t i = 1; i < verts.size(); ++i)
    if (verts[i] == verts[0]) throw Error("canonical_cycle: repeated vertex");
  if (verts[1] > verts.back()) std::reverse(verts.begin() + 1, verts.end());
  return Cycle{std::move(verts)};
}

/// All cycles of the underlying graph, in canonical form, sorted by
/// (length, vertex sequence). Every cycle appears exactly once.
inline std::vector<Cycle> enumerate_cycles(const MixedGraph& D) {
  const int n = D.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : D.edges()) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> in_path(static_cast<size_t>(n), 0);

  // Rooted DFS over vertices greater than the root; emitting only paths
  // whose second vertex is smaller than the closing one yields each cycle
  // in canonical form exactly once.
  auto dfs = [&](auto&& self, int root, int v) -> void {
    for (int w : adj[static_cast<size_t>(v)]) {
      if (w == root && path.size() >= 3 && path[1] < path.back())
        out.push_back(Cycle{path});
      if (w <= root || in_path[static_cast<size_t>(w)]) continue;
      in_path[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      self(self, root, w);
      path.pop_back();
      in_path[static_cast<size_t>(w)] = 0;
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    in_path.assign(static_cast<size_t>(n), 0);
    in_path[static_cast<size_t>(s)] = 1;
    dfs(dfs, s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Exponent k (mod 4) of the step value i^k contributed by traversing the
/// pair {a, b} from a to b: 0 for an undirected edge, +1 along an arc, -1
/// against it.
inline int step_exponent(const MixedGraph& D, int a, int b) {
  auto e = D.edge_between(a, b);
  if (!e) throw Error("walk step {" + std::to_string(a) + "," + std::to_string(b) +
                      "} is not an edge");
  if (e->kind == EdgeKind::Undirected) return 0;
  bool along = (e->kind == EdgeKind::Forward) ? (a == e->u) : (a == e->v);
  return along ? 1 : 3;
}

inline GaussInt unit_power(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0: return GaussInt(1);
    case 1: return GaussInt(BigInt(0), BigInt(1));
    case 2: return GaussInt(-1);
    default: return GaussInt(BigInt(0), BigInt(-1));
  }
}

}  // namespace detail

/// Value of a walk v_0, v_1, ..., v_k: the product of the Hermitian entries
/// along consecutive steps (1 per undirected edge, i along an arc, -i
/// against it). With closed = true the step from v_k back to v_0 is
/// included. Every step must be an edge of D.
inline GaussInt walk_value(const MixedGraph& D, const std::vector<int>& verts, bool closed) {
  if (verts.size() < 2) return GaussInt(1);
  int exp = 0;
  for (size_t i = 0; i + 1 < verts.size(); ++i)
    exp += detail::step_exponent(D, verts[i], verts[i + 1]);
  if (closed) exp += detail::step_exponent(D, verts.back(), verts.front());
  return detail::unit_power(exp);
}

/// h(C): the walk value around the cycle in its canonical direction. Always
/// one of 1, -1, i, -i; reversing the traversal conjugates it.
inline GaussInt cycle_value(const MixedGraph& D, const Cycle& C) {
  if (C.length() < 3) throw Error("cycle_value: not a cycle");
  return walk_value(D, C.verts, /*closed=*/true);
}

enum class CycleSign { Positive, Negative, ImaginaryPlus, ImaginaryMinus };

inline bool is_real(CycleSign s) {
  return s == CycleSign::Positive || s == CycleSign::Negative;
}

inline const char* cycle_sign_name(CycleSign s) {
  switch (s) {
    case CycleSign::Positive: return "positive";
    case CycleSign::Negative: return "negative";
    case CycleSign::ImaginaryPlus: return "imaginary(+i)";
    default: return "imaginary(-i)";
  }
}

inline CycleSign classify_cycle(const MixedGraph& D, const Cycle& C) {
  GaussInt h = cycle_value(D, C);
  if (h == GaussInt(1)) return CycleSign::Positive;
  if (h == GaussInt(-1)) return CycleSign::Negative;
  if (h == GaussInt(BigInt(0), BigInt(1))) return CycleSign::ImaginaryPlus;
  return CycleSign::ImaginaryMinus;
}

/// Length of a shortest cycle of the underlying graph; empty for forests.
inline std::optional<int> girth(const MixedGraph& D) {
  const int n = D.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : D.edges()) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  int best = -1;
  // BFS from every root; a non-tree edge at depths d(u), d(v) witnesses a
  // closed walk of length d(u)+d(v)+1 through the root. The minimum over
  // all roots is the girth.
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          parent[static_cast<size_t>(w)] = v;
          q.push(w);
        } else if (w != parent[static_cast<size_t>(v)]) {
          int len = dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(w)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

/// True when the underlying graph has no 4-cycle (induced or not): no two
/// distinct vertices share two common neighbors.
inline bool is_c4_free(const MixedGraph& D) {
  const int n = D.num_vertices();
  std::vector<std::vector<int>> nbr(static_cast<size_t>(n));
  for (const auto& e : D.edges()) {
    nbr[static_cast<size_t>(e.u)].push_back(e.v);
    nbr[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& v : nbr) std::sort(v.begin(), v.end());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto& a = nbr[static_cast<size_t>(u)];
      const auto& b = nbr[static_cast<size_t>(v)];
      size_t i = 0, j = 0;
      int common = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
          ++i;
        else if (a[i] > b[j])
          ++j;
        else {
          ++common;
          ++i;
          ++j;
        }
      }
      if (common >= 2) return false;
    }
  return true;
}

}  // namespace hermspec
