#pragma once

#include <vector>

#include "hermspec/gaussian.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

/// Dense Hermitian matrix with exact Gaussian-integer entries, row-major.
struct HermitianMatrix {
  int n = 0;
  std::vector<GaussInt> a;

  explicit HermitianMatrix(int size = 0)
      : n(size), a(static_cast<size_t>(size) * static_cast<size_t>(size)) {}

  GaussInt& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  const GaussInt& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
};

/// H(D): entry (u,v) is 1 for an undirected edge, i for the arc u -> v, -i
/// for the arc v -> u, 0 otherwise. Hermitian by construction.
inline HermitianMatrix hermitian_matrix(const MixedGraph& D) {
  HermitianMatrix H(D.num_vertices());
  const GaussInt one(1);
  const GaussInt iu = GaussInt::unit_i();
  for (const auto& e : D.edges()) {
    switch (e.kind) {
      case EdgeKind::Undirected:
        H.at(e.u, e.v) = one;
        H.at(e.v, e.u) = one;
        break;
      case EdgeKind::Forward:  // arc u -> v
        H.at(e.u, e.v) = iu;
        H.at(e.v, e.u) = -iu;
        break;
      case EdgeKind::Backward:  // arc v -> u
        H.at(e.u, e.v) = -iu;
        H.at(e.v, e.u) = iu;
        break;
    }
  }
  return H;
}

}  // namespace hermspec
