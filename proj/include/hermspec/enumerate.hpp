#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hermspec/cycles.hpp"
#include "hermspec/families.hpp"
#include "hermspec/isomorphism.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

enum class OrientationMode { All, OnePerSignVector };

struct EnumerationScope {
  int max_n = 6;
  bool c4free_only = true;
  bool connected_only = true;
  OrientationMode orientation_mode = OrientationMode::All;
};

/// Largest vertex count enumeration routines accept. HERMSPEC_MAX_N can
/// lower it; nothing can raise it past 10.
inline int enumeration_cap() {
  int cap = 10;
  if (const char* s = std::getenv("HERMSPEC_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

/// All undirected graphs on exactly max_n vertices up to isomorphism,
/// restricted by the scope flags. Built by vertex augmentation: every
/// (connected, C4-free) graph on k+1 vertices arises from one on k vertices
/// by attaching a new vertex, so growing level by level and deduplicating
/// by canonical code covers everything. Attaching to S keeps the graph
/// C4-free iff no two vertices of S have a common neighbour. Results are
/// sorted by canonical code.
inline std::vector<MixedGraph> enumerate_underlying(const EnumerationScope& scope) {
  const int cap = enumeration_cap();
  if (scope.max_n < 1) throw Error("enumerate_underlying: max_n must be at least 1");
  if (scope.max_n > cap)
    throw Error("enumerate_underlying: max_n " + std::to_string(scope.max_n) +
                " exceeds the enumeration cap " + std::to_string(cap));

  std::vector<MixedGraph> level = {MixedGraph(1, {})};
  for (int k = 1; k < scope.max_n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<MixedGraph> next;
    for (const MixedGraph& G : level) {
      auto rows = G.adjacency_rows();
      const std::uint64_t lo = scope.connected_only ? 1 : 0;
      for (std::uint64_t mask = lo; mask < (std::uint64_t(1) << k); ++mask) {
        if (scope.c4free_only) {
          bool ok = true;
          for (int u = 0; u < k && ok; ++u) {
            if (!((mask >> u) & 1)) continue;
            for (int v = u + 1; v < k && ok; ++v)
              if (((mask >> v) & 1) &&
                  (rows[static_cast<size_t>(u)] & rows[static_cast<size_t>(v)]))
                ok = false;
          }
          if (!ok) continue;
        }
        std::vector<Edge> edges = G.edges();
        for (int u = 0; u < k; ++u)
          if ((mask >> u) & 1) edges.push_back({u, k, EdgeKind::Undirected});
        MixedGraph H(k + 1, edges);
        if (seen.insert(canonical_code(H)).second) next.push_back(std::move(H));
      }
    }
    level = std::move(next);
  }

  std::sort(level.begin(), level.end(), [](const MixedGraph& a, const MixedGraph& b) {
    return canonical_code(a) < canonical_code(b);
  });
  return level;
}

/// All 3^|E| orientations of the undirected graph G, in digit order
/// (undirected < forward < backward per edge, later edges vary fastest).
inline std::vector<MixedGraph> enumerate_orientations(const MixedGraph& G) {
  std::vector<MixedGraph> out;
  out.reserve(64);
  for_each_orientation(G, [&](const std::vector<Edge>& edges) {
    out.emplace_back(G.num_vertices(), edges);
  });
  return out;
}

/// One representative orientation per realizable cycle sign vector. The
/// characteristic polynomial of an orientation depends only on the per-cycle
/// classes (positive / negative / imaginary), so for radius questions these
/// representatives cover all 3^|E| orientations.
struct OrientationClass {
  MixedGraph representative;
  std::vector<SignClass> signs;  // aligned with enumerate_cycles(G)
  std::uint64_t count = 0;       // orientations in the class
};

inline std::vector<OrientationClass> orientation_representatives(const MixedGraph& G) {
  const std::vector<Cycle> cycles = enumerate_cycles(G);
  std::map<std::vector<std::uint8_t>, size_t> index;
  std::vector<OrientationClass> out;
  for_each_orientation(G, [&](const std::vector<Edge>& edges) {
    MixedGraph D(G.num_vertices(), edges);
    std::vector<std::uint8_t> key;
    key.reserve(cycles.size());
    for (const auto& c : cycles)
      key.push_back(static_cast<std::uint8_t>(sign_class_of(classify_cycle(D, c))));
    auto [it, fresh] = index.emplace(key, out.size());
    if (fresh) {
      OrientationClass oc;
      oc.representative = std::move(D);
      for (auto b : key) oc.signs.push_back(static_cast<SignClass>(b));
      oc.count = 1;
      out.push_back(std::move(oc));
    } else {
      ++out[it->second].count;
    }
  });
  return out;
}

}  // namespace hermspec
