#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace disperse {

/// Exact signed rational number, always in canonical form: denominator > 0
/// and gcd(|numerator|, denominator) == 1. Arithmetic and comparisons are
/// exact; nothing rounds until approx() is explicitly requested.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT: integers are rationals
  Rational(long numerator, long denominator)
      : Rational(mpz_class(numerator), mpz_class(denominator)) {}
  Rational(mpz_class numerator, mpz_class denominator);

  /// Parses "12", "-3.5", ".25", "7.". Decimal digits are converted exactly
  /// (scale by the matching power of ten). Returns nullopt on bad syntax.
  static std::optional<Rational> from_decimal(std::string_view text);
  /// Accepts the decimal forms above plus "p/q" fractions.
  static std::optional<Rational> from_string(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q" in lowest terms, e.g. "-3/2", "5/1".
  std::string fraction_str() const;
  /// Exact decimal expansion ("-1.5"); defined only when the denominator has
  /// no prime factors besides 2 and 5, nullopt otherwise.
  std::optional<std::string> decimal_str() const;
  double approx() const { return q_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator-(const Rational& a) { return Rational(-a.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator*(const Rational& a, long k) { return Rational(a.q_ * k); }
  friend Rational operator*(long k, const Rational& a) { return a * k; }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw std::invalid_argument("division by zero");
    return Rational(a.q_ / b.q_);
  }
  friend Rational operator/(const Rational& a, long k) { return a / Rational(k); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.fraction_str();
  }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// A rational extended with a single +infinity that orders above every
/// finite value; adding a finite value to it stays infinite.
class ExtendedValue {
public:
  ExtendedValue(Rational v) : v_(std::move(v)) {}  // NOLINT: finite values convert
  static ExtendedValue unbounded() { return ExtendedValue(); }

  bool is_unbounded() const { return !v_.has_value(); }
  const Rational& finite() const {
    if (!v_) throw std::logic_error("finite() on unbounded value");
    return *v_;
  }

  ExtendedValue operator+(const Rational& r) const {
    return v_ ? ExtendedValue(*v_ + r) : unbounded();
  }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.is_unbounded() || b.is_unbounded()) return a.is_unbounded() == b.is_unbounded();
    return *a.v_ == *b.v_;
  }
  friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return !(a == b); }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (b.is_unbounded()) return !a.is_unbounded();
    if (a.is_unbounded()) return false;
    return *a.v_ < *b.v_;
  }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return !(b < a); }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return !(a < b); }

  friend const ExtendedValue& min(const ExtendedValue& a, const ExtendedValue& b) {
    return b < a ? b : a;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedValue& v) {
    return v.is_unbounded() ? os << "unbounded" : os << v.finite();
  }

private:
  ExtendedValue() = default;
  std::optional<Rational> v_;
};

}  // namespace disperse
