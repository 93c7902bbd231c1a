#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hermspec/gaussian.hpp"

namespace hermspec {

/// Dense univariate polynomial over an exact scalar ring T. Coefficients are
/// stored in ascending power order with no trailing zeros; the zero
/// polynomial is the empty coefficient vector and has degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return {}; }
  static Polynomial one() { return constant(T(1)); }
  static Polynomial constant(T c) {
    Polynomial p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
  }
  static Polynomial monomial(T c, int power) {
    Polynomial p;
    p.c_.assign(static_cast<size_t>(power) + 1, T(0));
    p.c_.back() = std::move(c);
    p.trim();
    return p;
  }
  static Polynomial from_ascending(std::vector<T> coeffs) {
    Polynomial p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }
  static Polynomial from_descending(std::vector<T> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return from_ascending(std::move(coeffs));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^k; zero beyond the degree.
  T coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<size_t>(k)];
  }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coeffs_ascending() const { return c_; }
  std::vector<T> coeffs_descending() const {
    std::vector<T> d(c_.rbegin(), c_.rend());
    return d;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = T(0) - c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    Polynomial r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Multiplication by x^k.
  Polynomial shifted(int k) const {
    if (is_zero()) return zero();
    Polynomial r;
    r.c_.assign(static_cast<size_t>(k), T(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  Polynomial derivative() const {
    Polynomial r;
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(T(static_cast<long>(i)) * c_[i]);
    r.trim();
    return r;
  }

  /// Horner evaluation at x, in a possibly wider scalar X (X must be
  /// constructible from T).
  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRat>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRat> c;
  c.reserve(p.coeffs_ascending().size());
  for (const auto& x : p.coeffs_ascending()) c.emplace_back(x);
  return RatPolynomial::from_ascending(std::move(c));
}

/// Quotient and remainder of a by b over the rationals; b must be nonzero.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                                      const RatPolynomial& b) {
  if (b.is_zero()) throw Error("divmod: division by zero polynomial");
  RatPolynomial q = RatPolynomial::zero();
  RatPolynomial r = a;
  const int db = b.degree();
  const BigRat lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    BigRat c = r.leading() / lb;
    int k = r.degree() - db;
    RatPolynomial t = RatPolynomial::monomial(c, k);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

/// Monic gcd over the rationals; gcd(0, 0) = 0.
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  BigRat inv_lead = BigRat(1) / a.leading();
  return inv_lead * a;
}

/// Integer gcd of the coefficients; content of the zero polynomial is 0.
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs_ascending()) g = boost::multiprecision::gcd(g, c);
  return g;
}

/// Clears denominators and divides out the content; leading coefficient is
/// made positive. primitive_part(0) = 0.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return IntPolynomial::zero();
  BigInt lcm_den = 1;
  for (const auto& c : p.coeffs_ascending())
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
  std::vector<BigInt> ic;
  ic.reserve(p.coeffs_ascending().size());
  for (const auto& c : p.coeffs_ascending()) {
    BigRat scaled = c * BigRat(lcm_den);
    ic.push_back(boost::multiprecision::numerator(scaled));
  }
  IntPolynomial q = IntPolynomial::from_ascending(std::move(ic));
  BigInt g = content(q);
  if (q.leading() < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(q.coeffs_ascending().size());
  for (const auto& c : q.coeffs_ascending()) out.push_back(c / g);
  return IntPolynomial::from_ascending(std::move(out));
}

/// Primitive gcd of integer polynomials, positive leading coefficient.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial g = gcd(to_rational(a), to_rational(b));
  return primitive_part(g);
}

/// Radical p / gcd(p, p'): same roots, all simple. Primitive with positive
/// leading coefficient; square_free(0) = 0.
inline IntPolynomial square_free(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return IntPolynomial::one();
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  auto [q, r] = divmod(rp, g);
  if (!r.is_zero()) throw Error("square_free: gcd does not divide");
  return primitive_part(q);
}

/// Renders the polynomial in conventional descending-power notation, e.g.
/// "x^3 - 3x" with the given variable symbol.
inline std::string to_display_string(const IntPolynomial& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt a = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1 || k == 0) out += a.str();
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace hermspec
