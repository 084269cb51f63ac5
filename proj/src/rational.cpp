/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace exactreal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return *r;
}

Rational Rational::pow2(long k) {
  mpz_class p = 1;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return k < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational rat(long long numerator, long long denominator) {
  return Rational(mpz_class(static_cast<signed long>(numerator)),
                  mpz_class(static_cast<signed long>(denominator)));
}

Rational rat(const mpz_class& numerator, const mpz_class& denominator) {
  return Rational(numerator, denominator);
}

ExtAccuracy ExtAccuracy::finite(Rational value) {
  if (value.sign() <= 0) throw std::invalid_argument("accuracy must be positive, got " + value.str());
  return ExtAccuracy(std::move(value));
}

const Rational& ExtAccuracy::value() const {
  if (!value_) throw std::logic_error("infinite accuracy has no rational value");
  return *value_;
}

std::string ExtAccuracy::str() const { return value_ ? value_->str() : "inf"; }

std::strong_ordering operator<=>(const ExtAccuracy& a, const ExtAccuracy& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Interval interval_of(const Rational& q, const Rational& eta) {
  if (eta.sign() <= 0) throw std::invalid_argument("interval radius must be positive");
  return Interval(q - eta, q + eta);
}

}  // namespace exactreal
