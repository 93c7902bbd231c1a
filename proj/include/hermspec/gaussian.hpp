#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace hermspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit integer that throws on overflow instead of wrapping. Used as a
/// fixed-width scalar for exact computations whose value range is known to
/// fit; an overflow is a hard error, never a silent wrap.
struct CheckedI64 {
  std::int64_t v = 0;

  CheckedI64() = default;
  CheckedI64(std::int64_t x) : v(x) {}

  friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Error("CheckedI64: overflow in +");
    return {r};
  }
  friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Error("CheckedI64: overflow in -");
    return {r};
  }
  friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Error("CheckedI64: overflow in *");
    return {r};
  }
  CheckedI64 operator-() const {
    if (v == INT64_MIN) throw Error("CheckedI64: overflow in negate");
    return {-v};
  }
  CheckedI64& operator+=(CheckedI64 o) { return *this = *this + o; }
  CheckedI64& operator-=(CheckedI64 o) { return *this = *this - o; }
  CheckedI64& operator*=(CheckedI64 o) { return *this = *this * o; }
  friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) { return {a.v / b.v}; }
  friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b) { return {a.v % b.v}; }
  friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
  friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
  friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v < b.v; }
  friend std::ostream& operator<<(std::ostream& os, CheckedI64 a) { return os << a.v; }
};

namespace detail {

template <class T>
inline constexpr bool is_rational_scalar = std::is_same_v<T, BigRat>;

}  // namespace detail

/// Gaussian integer (or rational) a + bi with exact component arithmetic.
template <class T>
struct GaussianInt {
  T re{};
  T im{};

  GaussianInt() = default;
  GaussianInt(T r) : re(std::move(r)) {}
  GaussianInt(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianInt unit_i() { return {T(0), T(1)}; }

  bool is_zero() const { return re == T(0) && im == T(0); }
  bool is_real() const { return im == T(0); }

  GaussianInt conjugate() const { return {re, T(0) - im}; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInt operator-() const { return {T(0) - re, T(0) - im}; }
  GaussianInt& operator+=(const GaussianInt& o) { return *this = *this + o; }
  GaussianInt& operator-=(const GaussianInt& o) { return *this = *this - o; }
  GaussianInt& operator*=(const GaussianInt& o) { return *this = *this * o; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
};

/// Divides z by a small positive integer k. For rational scalars this is a
/// plain division; for integral scalars the division must be exact and a
/// nonzero remainder throws.
template <class T>
inline void divide_exact(GaussianInt<T>& z, long k) {
  if constexpr (detail::is_rational_scalar<T>) {
    z.re /= k;
    z.im /= k;
  } else {
    if (z.re % T(k) != T(0) || z.im % T(k) != T(0))
      throw Error("divide_exact: inexact division in integral scalar");
    z.re = z.re / T(k);
    z.im = z.im / T(k);
  }
}

using GaussInt = GaussianInt<BigInt>;
using GaussRat = GaussianInt<BigRat>;

inline std::string to_string(const GaussInt& z) {
  if (z.is_zero()) return "0";
  std::string s;
  if (z.re != 0) s += z.re.str();
  if (z.im != 0) {
    if (z.im == 1)
      s += s.empty() ? "i" : "+i";
    else if (z.im == -1)
      s += "-i";
    else
      s += (z.im > 0 && !s.empty() ? "+" : "") + z.im.str() + "i";
  }
  return s;
}

template <class T>
inline std::ostream& operator<<(std::ostream& os, const GaussianInt<T>& z) {
  return os << "(" << z.re << "," << z.im << ")";
}

}  // namespace hermspec
