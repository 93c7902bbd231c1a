#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "hermspec/hermitian.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

inline Eigen::MatrixXcd hermitian_matrix_complex(const MixedGraph& D) {
  const int n = D.num_vertices();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  HermitianMatrix H = hermitian_matrix(D);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GaussInt& z = H.at(i, j);
      A(i, j) = std::complex<double>(static_cast<double>(z.re), static_cast<double>(z.im));
    }
  return A;
}

/// Eigenvalues of H(D) in descending order. The spectrum is real since H(D)
/// is Hermitian.
inline std::vector<double> eigenvalues(const MixedGraph& D) {
  const int n = D.num_vertices();
  if (n == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_matrix_complex(D),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalues: solver failed to converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

/// max |eigenvalue|; 0 for the empty graph.
inline double spectral_radius(const MixedGraph& D) {
  double r = 0.0;
  for (double x : eigenvalues(D)) r = std::max(r, std::fabs(x));
  return r;
}

struct EigenSystem {
  std::vector<double> values;   // descending
  Eigen::MatrixXcd vectors;     // column k pairs with values[k]
};

inline EigenSystem eigen_system(const MixedGraph& D) {
  const int n = D.num_vertices();
  EigenSystem sys;
  if (n == 0) {
    sys.vectors.resize(0, 0);
    return sys;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_matrix_complex(D));
  if (solver.info() != Eigen::Success) throw Error("eigen_system: solver failed to converge");
  // Solver order is ascending; flip to descending.
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = n - 1 - i;
  sys.values.resize(static_cast<size_t>(n));
  sys.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    sys.values[static_cast<size_t>(k)] = solver.eigenvalues()(idx[static_cast<size_t>(k)]);
    sys.vectors.col(k) = solver.eigenvectors().col(idx[static_cast<size_t>(k)]);
  }
  return sys;
}

}  // namespace hermspec
