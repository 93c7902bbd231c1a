#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "hermspec/charpoly.hpp"
#include "hermspec/eigenvalues.hpp"
#include "hermspec/families.hpp"
#include "hermspec/hermitian.hpp"
#include "hermspec/mixed_graph.hpp"
#include "hermspec/polynomial.hpp"
#include "test_util.hpp"

using namespace hermspec;

namespace {

// Reference characteristic polynomial: the permutation expansion of
// det(xI - H) over Gaussian-integer polynomials. Factorial cost; oracle use
// on n <= 5 only.
IntPolynomial charpoly_by_leibniz(const MixedGraph& D) {
  const int n = D.num_vertices();
  using GPoly = Polynomial<GaussInt>;
  HermitianMatrix H = hermitian_matrix(D);
  std::vector<GPoly> M(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      M[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)] =
          r == c ? GPoly::monomial(GaussInt(1), 1) : GPoly::constant(-H.at(r, c));

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  GPoly det;
  do {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    GPoly term = GPoly::one();
    for (int i = 0; i < n; ++i)
      term *= M[static_cast<size_t>(i) * static_cast<size_t>(n) +
                static_cast<size_t>(perm[static_cast<size_t>(i)])];
    if (inversions & 1)
      det -= term;
    else
      det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<BigInt> asc;
  for (int k = 0; k <= det.degree(); ++k) {
    GaussInt z = det.coeff(k);
    REQUIRE(z.im == 0);
    asc.push_back(z.re);
  }
  if (n == 0) return IntPolynomial::one();
  return IntPolynomial::from_ascending(std::move(asc));
}

MixedGraph random_mixed(std::mt19937& rng, int n, int percent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) {
        auto kind = static_cast<EdgeKind>(rng() % 3);
        edges.push_back({u, v, kind});
      }
  return MixedGraph(n, edges);
}

IntPolynomial ipoly(std::vector<BigInt> desc) {
  return IntPolynomial::from_descending(std::move(desc));
}

}  // namespace

TEST_CASE("hermitian matrix entries encode the orientation") {
  MixedGraph D = testutil::load_fixture("fig1_d1.mg");  // arcs 1->2, 2->3
  HermitianMatrix H = hermitian_matrix(D);
  REQUIRE(H.n == 4);
  REQUIRE(H.at(0, 1) == GaussInt(1));
  REQUIRE(H.at(1, 0) == GaussInt(1));
  REQUIRE(H.at(1, 2) == GaussInt::unit_i());
  REQUIRE(H.at(2, 1) == -GaussInt::unit_i());
  REQUIRE(H.at(2, 3) == GaussInt::unit_i());
  REQUIRE(H.at(0, 2) == GaussInt(0));
  for (int i = 0; i < 4; ++i) REQUIRE(H.at(i, i) == GaussInt(0));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) REQUIRE(H.at(r, c) == H.at(c, r).conjugate());
}

TEST_CASE("characteristic polynomials of the worked examples") {
  auto D1 = testutil::load_fixture("fig1_d1.mg");
  auto D2 = testutil::load_fixture("fig1_d2.mg");
  REQUIRE(charpoly_sachs(D1) == ipoly({1, 0, -5, 0, 4}));
  REQUIRE(charpoly_sachs(D2) == ipoly({1, 0, -6, 0, 9}));
  REQUIRE(charpoly_sachs(testutil::load_fixture("triangle_imaginary.mg")) ==
          ipoly({1, 0, -3, 0}));

  // Vertex and edge deletions from the second example.
  REQUIRE(charpoly_sachs(delete_vertex(D2, 1).graph) == ipoly({1, 0, -3, 0}));
  REQUIRE(charpoly_sachs(delete_edge(D2, 0, 2)) == ipoly({1, 0, -5, 0, 4}));

  REQUIRE(charpoly_sachs(generate(CycleSpec{4})) == ipoly({1, 0, -4, 0, 0}));
  REQUIRE(charpoly_sachs(orient_all_cycles(generate(CycleSpec{4}), SignClass::Negative)) ==
          ipoly({1, 0, -4, 0, 4}));

  REQUIRE(charpoly_sachs(MixedGraph(0, {})) == IntPolynomial::one());
  REQUIRE(charpoly_sachs(MixedGraph(1, {})) == IntPolynomial::monomial(BigInt(1), 1));
  REQUIRE(charpoly_sachs(generate(PathSpec{2})) == ipoly({1, 0, -1}));
  REQUIRE(charpoly_leverrier(MixedGraph(0, {})) == IntPolynomial::one());
}

TEST_CASE("all three characteristic polynomial routes match the determinant") {
  std::vector<MixedGraph> graphs{testutil::load_fixture("fig1_d1.mg"),
                                 testutil::load_fixture("fig1_d2.mg"),
                                 testutil::load_fixture("triangle_imaginary.mg"),
                                 generate(CycleSpec{5}),
                                 generate(StarSpec{4}),
                                 MixedGraph(0, {}),
                                 MixedGraph(1, {}),
                                 MixedGraph(3, {{0, 1, EdgeKind::Forward}})};
  std::mt19937 rng(40906);
  for (int i = 0; i < 20; ++i) graphs.push_back(random_mixed(rng, 2 + static_cast<int>(rng() % 4), 60));

  for (const auto& D : graphs) {
    IntPolynomial expect = charpoly_by_leibniz(D);
    REQUIRE(charpoly_sachs(D) == expect);
    REQUIRE(charpoly_leverrier(D) == expect);
    REQUIRE(charpoly_leverrier_checked(D) == expect);
  }
}

TEST_CASE("sachs and leverrier agree on larger random graphs") {
  std::mt19937 rng(271828);
  for (int i = 0; i < 50; ++i) {
    MixedGraph D = random_mixed(rng, 2 + static_cast<int>(rng() % 5), 55);
    IntPolynomial p = charpoly_sachs(D);
    REQUIRE(p == charpoly_leverrier(D));
    REQUIRE(p == charpoly_leverrier_checked(D));
    REQUIRE(p.degree() == D.num_vertices());
    REQUIRE(p.leading() == 1);
    // Trace of a Hermitian adjacency matrix is zero.
    REQUIRE(p.coeff(D.num_vertices() - 1) == 0);
  }
}

TEST_CASE("floating point spectra are consistent with the exact polynomial") {
  auto check = [](const MixedGraph& D) {
    IntPolynomial p = charpoly_sachs(D);
    std::vector<double> ev = eigenvalues(D);
    REQUIRE(ev.size() == static_cast<size_t>(D.num_vertices()));
    REQUIRE(std::is_sorted(ev.rbegin(), ev.rend()));
    for (double x : ev) REQUIRE(std::fabs(p.eval(x)) < 1e-6);
    double r = spectral_radius(D);
    for (double x : ev) REQUIRE(std::fabs(x) <= r + 1e-12);
  };
  check(testutil::load_fixture("fig1_d1.mg"));
  check(testutil::load_fixture("fig1_d2.mg"));
  check(generate(CycleSpec{6}));
  std::mt19937 rng(99);
  for (int i = 0; i < 10; ++i) check(random_mixed(rng, 6, 50));

  std::vector<double> c6 = eigenvalues(generate(CycleSpec{6}));
  std::vector<double> want{2, 1, 1, -1, -1, -2};
  for (size_t i = 0; i < want.size(); ++i)
    REQUIRE(std::fabs(c6[i] - want[i]) < 1e-9);

  REQUIRE(spectral_radius(MixedGraph(0, {})) == 0.0);
  REQUIRE(std::fabs(spectral_radius(testutil::load_fixture("fig1_d2.mg")) - std::sqrt(3.0)) <
          1e-12);
}

TEST_CASE("eigen system returns matching pairs") {
  MixedGraph D = testutil::load_fixture("fig1_d2.mg");
  EigenSystem sys = eigen_system(D);
  Eigen::MatrixXcd A = hermitian_matrix_complex(D);
  REQUIRE(sys.values.size() == 4);
  REQUIRE(std::is_sorted(sys.values.rbegin(), sys.values.rend()));
  for (int k = 0; k < 4; ++k) {
    Eigen::VectorXcd v = sys.vectors.col(k);
    REQUIRE((A * v - sys.values[static_cast<size_t>(k)] * v).norm() < 1e-9);
    REQUIRE(std::fabs(v.norm() - 1.0) < 1e-9);
  }
  EigenSystem empty = eigen_system(MixedGraph(0, {}));
  REQUIRE(empty.values.empty());
}
