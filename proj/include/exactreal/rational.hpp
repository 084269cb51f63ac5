/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace exactreal {

/// Exact rational number, always kept in canonical form (positive
/// denominator, gcd 1) so that structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design of numeric literals
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "n", "-n", "+n", "n/d" with d a positive decimal integer.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  /// 2^k for any (possibly negative) k.
  static Rational pow2(long k);

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// rat(n, d) = n/d in canonical form; throws std::invalid_argument if d == 0.
Rational rat(long long numerator, long long denominator);
Rational rat(const mpz_class& numerator, const mpz_class& denominator);

inline Rational abs(const Rational& r) { return r.abs(); }

/// A positive rational accuracy, or +infinity ("no information").
class ExtAccuracy {
 public:
  /// Throws std::invalid_argument unless value > 0.
  static ExtAccuracy finite(Rational value);
  static ExtAccuracy infinity() { return ExtAccuracy(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on infinity.
  const Rational& value() const;

  std::string str() const;

  friend bool operator==(const ExtAccuracy&, const ExtAccuracy&) = default;
  friend std::strong_ordering operator<=>(const ExtAccuracy& a, const ExtAccuracy& b);
  friend bool operator<=(const ExtAccuracy& a, const Rational& b) {
    return a.is_finite() && *a.value_ <= b;
  }

 private:
  ExtAccuracy() = default;
  explicit ExtAccuracy(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// Closed interval [lo, hi] with lo <= hi.
class Interval {
 public:
  /// Throws std::invalid_argument if lo > hi.
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string str() const;

 private:
  Rational lo_;
  Rational hi_;
};

/// [q - eta, q + eta]; throws std::invalid_argument unless eta > 0.
Interval interval_of(const Rational& q, const Rational& eta);

}  // namespace exactreal
