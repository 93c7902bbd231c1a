#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hermspec/mixed_graph.hpp"

namespace hermspec {

/// Finds an induced embedding of the underlying graph of `pattern` into the
/// underlying graph of `target`: an injective map f with uv an edge iff
/// f(u)f(v) is an edge. Orientations are ignored on both sides. Pattern
/// vertices are assigned in index order to the smallest feasible target
/// vertices, so the returned vector (pattern vertex -> target vertex) is
/// the lexicographically least embedding. Requires n <= 64 on both sides.
inline std::optional<std::vector<int>> embed_induced(const MixedGraph& pattern,
                                                     const MixedGraph& target) {
  const int np = pattern.num_vertices(), nt = target.num_vertices();
  if (np > nt) return std::nullopt;
  if (np == 0) return std::vector<int>{};
  auto rp = pattern.adjacency_rows();
  auto rt = target.adjacency_rows();
  std::vector<int> dp(static_cast<size_t>(np)), dt(static_cast<size_t>(nt));
  for (int v = 0; v < np; ++v) dp[static_cast<size_t>(v)] = __builtin_popcountll(rp[static_cast<size_t>(v)]);
  for (int v = 0; v < nt; ++v) dt[static_cast<size_t>(v)] = __builtin_popcountll(rt[static_cast<size_t>(v)]);

  std::vector<int> map(static_cast<size_t>(np), -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == np) return true;
    for (int c = 0; c < nt; ++c) {
      if (used & (std::uint64_t(1) << c)) continue;
      if (dt[static_cast<size_t>(c)] < dp[static_cast<size_t>(i)]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        bool pe = (rp[static_cast<size_t>(i)] >> j) & 1;
        bool te = (rt[static_cast<size_t>(c)] >> map[static_cast<size_t>(j)]) & 1;
        if (pe != te) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(i)] = c;
      used |= std::uint64_t(1) << c;
      if (self(self, i + 1)) return true;
      used &= ~(std::uint64_t(1) << c);
      map[static_cast<size_t>(i)] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

/// Isomorphism test on underlying graphs (any size).
inline bool is_isomorphic_undirected(const MixedGraph& a, const MixedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int n = a.num_vertices();
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return embed_induced(a, b).has_value();
}

/// Canonical form of the underlying graph packed into a uint64, equal for
/// exactly the isomorphic graphs. The form is the lexicographically largest
/// relabeled adjacency bitstring in column-major upper-triangle order, found
/// by branch and bound: per level only label choices maximizing the newly
/// fixed bit group survive (those bits outrank all later ones), and twin
/// candidates are explored once. Requires n <= 11 (55 bits + size tag).
inline std::uint64_t canonical_code(const MixedGraph& G) {
  const int n = G.num_vertices();
  if (n > 11) throw Error("canonical_code: more than 11 vertices");
  auto rows = G.adjacency_rows();

  std::vector<int> pos(static_cast<size_t>(n), -1);  // pos[k] = old vertex at position k
  std::uint64_t best = 0;
  bool have_best = false;

  auto rec = [&](auto&& self, int k, std::uint64_t acc, std::uint64_t usedmask) -> void {
    if (k == n) {
      if (!have_best || acc > best) {
        best = acc;
        have_best = true;
      }
      return;
    }
    // Bit group fixed at this level: adjacency of the new position k to
    // positions 0..k-1, most significant first.
    std::vector<std::pair<std::uint64_t, int>> cands;
    std::uint64_t bestg = 0;
    for (int u = 0; u < n; ++u) {
      if (usedmask & (std::uint64_t(1) << u)) continue;
      std::uint64_t g = 0;
      for (int i = 0; i < k; ++i)
        g = (g << 1) | ((rows[static_cast<size_t>(u)] >> pos[static_cast<size_t>(i)]) & 1);
      if (cands.empty() || g > bestg) bestg = g;
      cands.push_back({g, u});
    }
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      auto [g, u] = cands[ci];
      if (g != bestg) continue;
      bool twin_seen = false;
      for (size_t cj = 0; cj < ci && !twin_seen; ++cj) {
        auto [g2, w] = cands[cj];
        if (g2 != bestg) continue;
        std::uint64_t strip = ~((std::uint64_t(1) << u) | (std::uint64_t(1) << w));
        if ((rows[static_cast<size_t>(u)] & strip) == (rows[static_cast<size_t>(w)] & strip))
          twin_seen = true;
      }
      if (twin_seen) continue;
      pos[static_cast<size_t>(k)] = u;
      self(self, k + 1, (acc << k) | g, usedmask | (std::uint64_t(1) << u));
      pos[static_cast<size_t>(k)] = -1;
    }
  };
  rec(rec, 0, 0, 0);
  return (std::uint64_t(n) << 55) | best;
}

}  // namespace hermspec
