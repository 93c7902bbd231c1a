#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hermspec/cycles.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

/// An elementary subgraph: vertex-disjoint single edges and cycles. Its
/// order is the number of vertices it covers.
struct ElementarySubgraph {
  std::vector<std::pair<int, int>> edges;  // K2 components, u < v
  std::vector<Cycle> cycles;

  int order() const {
    int k = static_cast<int>(edges.size()) * 2;
    for (const auto& c : cycles) k += c.length();
    return k;
  }
  int num_components() const {
    return static_cast<int>(edges.size() + cycles.size());
  }
  int num_cycles() const { return static_cast<int>(cycles.size()); }
};

/// Visits every nonempty elementary subgraph of D once. With
/// real_cycles_only, cycles whose value is imaginary are not used as
/// components. The visited object is a reused buffer; copy to keep.
/// Requires n <= 64.
template <class F>
void for_each_elementary(const MixedGraph& D, bool real_cycles_only, F&& visit) {
  if (D.num_vertices() > 64) throw Error("for_each_elementary: more than 64 vertices");

  struct Component {
    std::uint64_t vmask;
    bool is_cycle;
    std::pair<int, int> edge;
    const Cycle* cycle;
  };
  std::vector<Component> comps;
  for (const auto& e : D.edges())
    comps.push_back({(std::uint64_t(1) << e.u) | (std::uint64_t(1) << e.v),
                     false,
                     {e.u, e.v},
                     nullptr});
  std::vector<Cycle> cycles = enumerate_cycles(D);
  std::vector<Cycle> kept;
  kept.reserve(cycles.size());
  for (auto& c : cycles) {
    if (real_cycles_only && !is_real(classify_cycle(D, c))) continue;
    kept.push_back(std::move(c));
  }
  for (const auto& c : kept) {
    std::uint64_t m = 0;
    for (int v : c.verts) m |= std::uint64_t(1) << v;
    comps.push_back({m, true, {-1, -1}, &c});
  }

  ElementarySubgraph buf;
  auto rec = [&](auto&& self, size_t idx, std::uint64_t used) -> void {
    for (size_t i = idx; i < comps.size(); ++i) {
      const Component& c = comps[i];
      if (c.vmask & used) continue;
      if (c.is_cycle)
        buf.cycles.push_back(*c.cycle);
      else
        buf.edges.push_back(c.edge);
      visit(const_cast<const ElementarySubgraph&>(buf));
      self(self, i + 1, used | c.vmask);
      if (c.is_cycle)
        buf.cycles.pop_back();
      else
        buf.edges.pop_back();
    }
  };
  rec(rec, 0, 0);
}

/// Materializes the elementary subgraphs of the given order.
inline std::vector<ElementarySubgraph> enumerate_elementary(const MixedGraph& D, int order,
                                                            bool real_cycles_only = false) {
  std::vector<ElementarySubgraph> out;
  for_each_elementary(D, real_cycles_only, [&](const ElementarySubgraph& h) {
    if (h.order() == order) out.push_back(h);
  });
  return out;
}

}  // namespace hermspec
