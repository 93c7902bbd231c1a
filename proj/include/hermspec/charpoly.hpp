#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#include "hermspec/elementary.hpp"
#include "hermspec/gaussian.hpp"
#include "hermspec/hermitian.hpp"
#include "hermspec/mixed_graph.hpp"
#include "hermspec/polynomial.hpp"

namespace hermspec {

namespace detail {

/// Faddeev-LeVerrier over an exact scalar: returns the monic characteristic
/// polynomial coefficients c_0 = 1, c_1, ..., c_n of det(xI - A), highest
/// power first. Works in any scalar where the divisions by 1..n are exact
/// (rationals always; integral scalars rely on the recurrence's exactness).
template <class T>
std::vector<GaussianInt<T>> leverrier(int n, const std::vector<GaussianInt<T>>& A) {
  using G = GaussianInt<T>;
  std::vector<G> c(static_cast<size_t>(n) + 1);
  c[0] = G(T(1));
  std::vector<G> M(static_cast<size_t>(n) * n);  // M_1 = I
  for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = G(T(1));
  std::vector<G> AM(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        G acc;
        for (int l = 0; l < n; ++l)
          acc += A[static_cast<size_t>(i) * n + l] * M[static_cast<size_t>(l) * n + j];
        AM[static_cast<size_t>(i) * n + j] = acc;
      }
    G tr;
    for (int i = 0; i < n; ++i) tr += AM[static_cast<size_t>(i) * n + i];
    divide_exact(tr, k);
    c[static_cast<size_t>(k)] = -tr;
    M = AM;
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += c[static_cast<size_t>(k)];
  }
  return c;
}

template <class T>
BigInt to_big_int_real(const GaussianInt<T>& z, const char* where) {
  if (!(z.im == T(0))) throw Error(std::string(where) + ": non-real coefficient");
  if constexpr (is_rational_scalar<T>) {
    if (boost::multiprecision::denominator(z.re) != 1)
      throw Error(std::string(where) + ": non-integral coefficient");
    return boost::multiprecision::numerator(z.re);
  } else if constexpr (std::is_same_v<T, CheckedI64>) {
    return BigInt(z.re.v);
  } else {
    return BigInt(z.re);
  }
}

template <class T>
T scalar_from_bigint(const BigInt& x) {
  if constexpr (std::is_same_v<T, CheckedI64>) {
    return CheckedI64(x.convert_to<std::int64_t>());
  } else {
    return T(x);
  }
}

/// Shared linear-algebra route with a caller-chosen scalar.
template <class T>
IntPolynomial charpoly_leverrier_as(const MixedGraph& D) {
  const int n = D.num_vertices();
  HermitianMatrix H = hermitian_matrix(D);
  std::vector<GaussianInt<T>> A(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GaussInt& z = H.at(i, j);
      A[static_cast<size_t>(i) * n + j] =
          GaussianInt<T>(scalar_from_bigint<T>(z.re), scalar_from_bigint<T>(z.im));
    }
  std::vector<GaussianInt<T>> c = leverrier<T>(n, A);
  std::vector<BigInt> desc;
  desc.reserve(c.size());
  for (const auto& z : c) desc.push_back(to_big_int_real(z, "charpoly_leverrier"));
  return IntPolynomial::from_descending(std::move(desc));
}

}  // namespace detail

/// Characteristic polynomial of H(D) by the Faddeev-LeVerrier recurrence
/// over Gaussian rationals. Every coefficient is checked to be a real
/// integer; a violation is an internal error.
inline IntPolynomial charpoly_leverrier(const MixedGraph& D) {
  return detail::charpoly_leverrier_as<BigRat>(D);
}

/// Same route instantiated on overflow-checked 64-bit integers. The
/// intermediate matrices stay integral for Hermitian {0, ±1, ±i} inputs, so
/// this is exact whenever no intermediate exceeds 63 bits; an overflow
/// throws rather than returning a wrong answer.
inline IntPolynomial charpoly_leverrier_checked(const MixedGraph& D) {
  return detail::charpoly_leverrier_as<CheckedI64>(D);
}

/// Characteristic polynomial assembled from elementary subgraphs: the
/// coefficient of x^(n-i) is the sum over elementary subgraphs of order i
/// whose cycles all have real value of (-1)^(components + negative cycles)
/// * 2^(cycles).
inline IntPolynomial charpoly_sachs(const MixedGraph& D) {
  const int n = D.num_vertices();
  std::vector<BigInt> c(static_cast<size_t>(n) + 1);
  c[0] = 1;
  for_each_elementary(D, /*real_cycles_only=*/true, [&](const ElementarySubgraph& h) {
    int negatives = 0;
    for (const auto& cyc : h.cycles)
      if (classify_cycle(D, cyc) == CycleSign::Negative) ++negatives;
    int t = h.num_components();
    BigInt term = BigInt(1) << h.num_cycles();
    if ((t + negatives) & 1) term = -term;
    c[static_cast<size_t>(h.order())] += term;
  });
  return IntPolynomial::from_descending(std::move(c));
}

}  // namespace hermspec
