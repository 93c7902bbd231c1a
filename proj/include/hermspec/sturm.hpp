#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermspec/charpoly.hpp"
#include "hermspec/mixed_graph.hpp"
#include "hermspec/polynomial.hpp"

namespace hermspec {

namespace detail {

inline int sign_of(const BigRat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

/// Sturm chain of a squarefree polynomial: s0 = p, s1 = p', then negated
/// remainders down to a nonzero constant.
inline std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain;
  chain.push_back(p);
  RatPolynomial d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.back().degree() > 0) {
    const RatPolynomial& a = chain[chain.size() - 2];
    const RatPolynomial& b = chain.back();
    RatPolynomial r = -divmod(a, b).second;
    if (r.is_zero()) break;  // cannot happen for squarefree input
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_variations_at(const std::vector<RatPolynomial>& chain, const BigRat& x) {
  int count = 0, prev = 0;
  for (const auto& s : chain) {
    int sgn = sign_of(s.eval(x));
    if (sgn == 0) continue;
    if (prev != 0 && sgn != prev) ++count;
    prev = sgn;
  }
  return count;
}

/// Sign variations in the limit x -> +inf (dir = +1) or -inf (dir = -1).
inline int sign_variations_at_infinity(const std::vector<RatPolynomial>& chain, int dir) {
  int count = 0, prev = 0;
  for (const auto& s : chain) {
    int sgn = sign_of(s.leading());
    if (dir < 0 && (s.degree() & 1)) sgn = -sgn;
    if (sgn == 0) continue;
    if (prev != 0 && sgn != prev) ++count;
    prev = sgn;
  }
  return count;
}

/// Divides out the (simple) root at x = r. Remainder must vanish.
inline RatPolynomial deflate_root(const RatPolynomial& p, const BigRat& r) {
  RatPolynomial lin =
      RatPolynomial::from_ascending(std::vector<BigRat>{-r, BigRat(1)});
  auto [q, rem] = divmod(p, lin);
  if (!rem.is_zero()) throw Error("deflate_root: claimed root does not divide");
  return q;
}

}  // namespace detail

/// Number of distinct real roots of p strictly greater than b, by Sturm's
/// theorem on the squarefree part.
inline int count_roots_greater(const IntPolynomial& p, const BigRat& b) {
  if (p.is_zero()) throw Error("count_roots_greater: zero polynomial");
  RatPolynomial s = to_rational(square_free(p));
  if (s.degree() <= 0) return 0;
  while (!s.is_zero() && s.eval(b) == 0) s = detail::deflate_root(s, b);
  if (s.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(s);
  return detail::sign_variations_at(chain, b) - detail::sign_variations_at_infinity(chain, +1);
}

/// Number of distinct real roots of p strictly less than a.
inline int count_roots_less(const IntPolynomial& p, const BigRat& a) {
  if (p.is_zero()) throw Error("count_roots_less: zero polynomial");
  RatPolynomial s = to_rational(square_free(p));
  if (s.degree() <= 0) return 0;
  while (!s.is_zero() && s.eval(a) == 0) s = detail::deflate_root(s, a);
  if (s.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(s);
  return detail::sign_variations_at_infinity(chain, -1) - detail::sign_variations_at(chain, a);
}

/// Distinct real roots with |root| > r.
inline int count_roots_outside(const IntPolynomial& p, const BigRat& r) {
  return count_roots_greater(p, r) + count_roots_less(p, -r);
}

enum class RadiusClass { Below, Exactly, Above };

inline const char* radius_class_name(RadiusClass c) {
  switch (c) {
    case RadiusClass::Below: return "below";
    case RadiusClass::Exactly: return "exactly";
    default: return "above";
  }
}

/// Exact placement of the largest root magnitude of a real-rooted integer
/// polynomial against a rational bound, with counting witnesses.
struct RadiusComparison {
  RadiusClass cls = RadiusClass::Below;
  int roots_above = 0;       // distinct roots > bound
  int roots_below = 0;       // distinct roots < -bound
  bool upper_is_root = false;  // p(bound) == 0
  bool lower_is_root = false;  // p(-bound) == 0
};

/// Decides whether max |root| of p is below, exactly at, or above the given
/// nonnegative rational bound. Intended for characteristic polynomials of
/// Hermitian matrices, whose roots are all real.
inline RadiusComparison compare_radius(const IntPolynomial& p, const BigRat& bound) {
  if (p.is_zero()) throw Error("compare_radius: zero polynomial");
  if (bound < 0) throw Error("compare_radius: negative bound");
  RadiusComparison out;
  out.roots_above = count_roots_greater(p, bound);
  out.roots_below = count_roots_less(p, -bound);
  out.upper_is_root = p.eval(bound) == 0;
  out.lower_is_root = p.eval(BigRat(-bound)) == 0;
  if (out.roots_above + out.roots_below > 0)
    out.cls = RadiusClass::Above;
  else if (out.upper_is_root || out.lower_is_root)
    out.cls = RadiusClass::Exactly;
  else
    out.cls = RadiusClass::Below;
  return out;
}

inline RadiusComparison compare_radius(const MixedGraph& D, const BigRat& bound = BigRat(2)) {
  return compare_radius(charpoly_leverrier(D), bound);
}

namespace detail {

inline bool is_monomial(const IntPolynomial& p) {
  for (int k = 0; k < p.degree(); ++k)
    if (p.coeff(k) != 0) return false;
  return true;
}

inline BigRat cauchy_bound(const IntPolynomial& p) {
  BigInt lead = p.leading();
  if (lead < 0) lead = -lead;
  BigInt mx = 0;
  for (int k = 0; k < p.degree(); ++k) {
    BigInt a = p.coeff(k);
    if (a < 0) a = -a;
    if (a > mx) mx = a;
  }
  return BigRat(1) + BigRat(mx) / BigRat(lead);
}

}  // namespace detail

/// Exact three-way comparison of the largest root magnitudes of two
/// real-rooted integer polynomials: -1, 0 or +1 when max|roots(p)| is
/// smaller, equal or larger than max|roots(q)|. Equality is certified only
/// in the degenerate all-roots-zero case; otherwise bisection that fails to
/// separate the radii within max_iter steps returns nullopt.
inline std::optional<int> compare_spectral_radii(const IntPolynomial& p, const IntPolynomial& q,
                                                 int max_iter = 80) {
  if (p.is_zero() || q.is_zero()) throw Error("compare_spectral_radii: zero polynomial");
  bool pz = detail::is_monomial(p), qz = detail::is_monomial(q);
  // A monomial c*x^k has radius 0; anything else has a nonzero root.
  if (pz && qz) return 0;
  if (pz) return -1;
  if (qz) return 1;
  BigRat lo = 0;
  BigRat hi = std::max(detail::cauchy_bound(p), detail::cauchy_bound(q));
  for (int it = 0; it < max_iter; ++it) {
    BigRat mid = (lo + hi) / 2;
    bool a = count_roots_outside(p, mid) > 0;
    bool b = count_roots_outside(q, mid) > 0;
    if (a && !b) return 1;
    if (!a && b) return -1;
    if (a)
      lo = mid;
    else
      hi = mid;
  }
  return std::nullopt;
}

}  // namespace hermspec
