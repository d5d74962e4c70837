#include "disperse/rational.hpp"

#include <cstddef>

namespace disperse {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class pow10(std::size_t k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return p;
}

}  // namespace

Rational::Rational(mpz_class numerator, mpz_class denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(std::move(numerator), std::move(denominator));
  q_.canonicalize();
}

std::optional<Rational> Rational::from_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const std::size_t dot = s.find('.');
  std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  mpz_class num = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
  if (!frac_part.empty()) {
    num *= pow10(frac_part.size());
    num += mpz_class(std::string(frac_part), 10);
  }
  if (negative) num = -num;
  return Rational(std::move(num), pow10(frac_part.size()));
}

std::optional<Rational> Rational::from_string(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return from_decimal(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  if (negative) p = -p;
  return Rational(std::move(p), std::move(q));
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<std::string> Rational::decimal_str() const {
  // Strip the factors of 2 and 5; anything left over means no finite expansion.
  mpz_class den = q_.get_den();
  std::size_t twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) return std::nullopt;

  const std::size_t k = twos > fives ? twos : fives;
  mpz_class scaled = abs(q_.get_num()) * pow10(k);
  mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), q_.get_den().get_mpz_t());
  std::string digits = scaled.get_str();
  std::string out;
  if (sign() < 0) out += '-';
  if (k == 0) {
    out += digits;
  } else {
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    out += digits.substr(0, digits.size() - k);
    out += '.';
    out += digits.substr(digits.size() - k);
  }
  return out;
}

}  // namespace disperse
