#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hermspec/families.hpp"
#include "hermspec/sturm.hpp"
#include "test_util.hpp"

using namespace hermspec;

namespace {

IntPolynomial ipoly(std::vector<BigInt> desc) {
  return IntPolynomial::from_descending(std::move(desc));
}

}  // namespace

TEST_CASE("root counting against rational cut points") {
  IntPolynomial p = ipoly({1, 0, -4});  // roots -2, 2
  REQUIRE(count_roots_greater(p, BigRat(1)) == 1);
  REQUIRE(count_roots_greater(p, BigRat(2)) == 0);
  REQUIRE(count_roots_greater(p, BigRat(-3)) == 2);
  REQUIRE(count_roots_less(p, BigRat(0)) == 1);
  REQUIRE(count_roots_less(p, BigRat(-2)) == 0);
  REQUIRE(count_roots_less(p, BigRat(3)) == 2);
  REQUIRE(count_roots_outside(p, BigRat(1)) == 2);
  REQUIRE(count_roots_outside(p, BigRat(3, 2)) == 2);
  REQUIRE(count_roots_outside(p, BigRat(2)) == 0);

  // Multiplicities do not matter: (x-2)^2 (x+1).
  IntPolynomial q = ipoly({1, -3, 0, 4});
  REQUIRE(count_roots_greater(q, BigRat(0)) == 1);
  REQUIRE(count_roots_greater(q, BigRat(2)) == 0);
  REQUIRE(count_roots_less(q, BigRat(0)) == 1);

  REQUIRE(count_roots_greater(IntPolynomial::constant(BigInt(5)), BigRat(0)) == 0);
  REQUIRE_THROWS_AS(count_roots_greater(IntPolynomial::zero(), BigRat(0)), Error);
}

TEST_CASE("radius placement against a bound") {
  auto at2 = [](const IntPolynomial& p) { return compare_radius(p, BigRat(2)); };

  RadiusComparison c = at2(ipoly({1, 0, -4}));  // roots ±2
  REQUIRE(c.cls == RadiusClass::Exactly);
  REQUIRE(c.upper_is_root);
  REQUIRE(c.lower_is_root);
  REQUIRE(c.roots_above == 0);
  REQUIRE(c.roots_below == 0);

  c = at2(ipoly({1, 0, -5}));  // roots ±sqrt5
  REQUIRE(c.cls == RadiusClass::Above);
  REQUIRE(c.roots_above == 1);
  REQUIRE(c.roots_below == 1);

  c = at2(ipoly({1, 0, -3}));  // roots ±sqrt3
  REQUIRE(c.cls == RadiusClass::Below);
  REQUIRE_FALSE(c.upper_is_root);

  c = at2(ipoly({1, -4, 4}));  // double root at 2
  REQUIRE(c.cls == RadiusClass::Exactly);
  REQUIRE(c.upper_is_root);
  REQUIRE_FALSE(c.lower_is_root);

  c = at2(ipoly({1, 1, -6}));  // roots 2 and -3
  REQUIRE(c.cls == RadiusClass::Above);
  REQUIRE(c.roots_above == 0);
  REQUIRE(c.roots_below == 1);
  REQUIRE(c.upper_is_root);

  REQUIRE(compare_radius(ipoly({1, 0}), BigRat(0)).cls == RadiusClass::Exactly);
  REQUIRE(compare_radius(ipoly({1, 0, -1}), BigRat(0)).cls == RadiusClass::Above);
  REQUIRE(compare_radius(IntPolynomial::constant(BigInt(3)), BigRat(2)).cls ==
          RadiusClass::Below);
  REQUIRE_THROWS_AS(compare_radius(ipoly({1, 0, -4}), BigRat(-1)), Error);
  REQUIRE_THROWS_AS(compare_radius(IntPolynomial::zero(), BigRat(2)), Error);

  REQUIRE(std::string(radius_class_name(RadiusClass::Below)) == "below");
  REQUIRE(std::string(radius_class_name(RadiusClass::Exactly)) == "exactly");
  REQUIRE(std::string(radius_class_name(RadiusClass::Above)) == "above");
}

TEST_CASE("radius placement of graphs") {
  REQUIRE(compare_radius(generate(PathSpec{2})).cls == RadiusClass::Below);
  REQUIRE(compare_radius(generate(CycleSpec{3})).cls == RadiusClass::Exactly);
  REQUIRE(compare_radius(generate(CycleSpec{4})).cls == RadiusClass::Exactly);
  REQUIRE(compare_radius(generate(StarSpec{4})).cls == RadiusClass::Exactly);
  REQUIRE(compare_radius(generate(StarLikeSpec{{2, 2, 2}})).cls == RadiusClass::Exactly);
  REQUIRE(compare_radius(generate(YSpec{2, 3, 2})).cls == RadiusClass::Exactly);

  std::vector<Edge> k4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.push_back({u, v, EdgeKind::Undirected});
  REQUIRE(compare_radius(MixedGraph(4, k4)).cls == RadiusClass::Above);

  REQUIRE(compare_radius(testutil::load_fixture("fig1_d2.mg")).cls == RadiusClass::Below);
  REQUIRE(compare_radius(testutil::load_fixture("fig1_d2.mg"), BigRat(1)).cls ==
          RadiusClass::Above);
}

TEST_CASE("three-way radius comparison") {
  REQUIRE(compare_spectral_radii(ipoly({1, 0, 0}), ipoly({1, 0, 0, 0})) == 0);
  REQUIRE(compare_spectral_radii(ipoly({1, 0, -2}), ipoly({1, 0, -3})) == -1);
  REQUIRE(compare_spectral_radii(ipoly({1, 0, -3}), ipoly({1, 0, -2})) == 1);
  REQUIRE(compare_spectral_radii(ipoly({1, 0, -2}), ipoly({5, 0, 0})) == 1);
  REQUIRE(compare_spectral_radii(ipoly({3, 0}), ipoly({1, 0, -2})) == -1);

  // Equal nonzero radii cannot be separated.
  REQUIRE_FALSE(compare_spectral_radii(ipoly({1, 0, -2}), ipoly({1, 0, -2})).has_value());
  REQUIRE_FALSE(compare_spectral_radii(ipoly({1, 0, -4}), ipoly({1, 0, 0, 0, -16})).has_value());

  REQUIRE_THROWS_AS(compare_spectral_radii(IntPolynomial::zero(), ipoly({1, 0})), Error);
}
