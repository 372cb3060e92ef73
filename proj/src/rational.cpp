#include "cantor/rational.hpp"

#include <algorithm>
#include <ostream>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer pow10(unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

// Returns e with 10^e <= v < 10^(e+1), for v > 0.
long decimal_exponent(const mpq_class& v) {
  // Digit counts give an estimate within one of the true exponent.
  const long num_digits = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 10));
  const long den_digits = static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 10));
  long e = num_digits - den_digits;
  auto power = [](long k) {
    mpq_class p(1);
    if (k >= 0) {
      p = mpq_class(pow10(static_cast<unsigned>(k)));
    } else {
      p = mpq_class(Integer(1), pow10(static_cast<unsigned>(-k)));
    }
    return p;
  };
  while (power(e) > v) --e;
  while (power(e + 1) <= v) ++e;
  return e;
}

// Rounds the non-negative rational v to the nearest integer, ties to even.
Integer round_half_even(const mpq_class& v) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  const int c = cmp(Integer(2 * r), v.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(static_cast<long>(numerator)), Integer(static_cast<long>(denominator))) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  }
  Integer num(std::string(num_text), 10);
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_compact_string() const {
  return is_integer() ? value_.get_num().get_str() : to_string();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) throw DomainError("to_decimal needs at least one significant digit");
  const auto n = static_cast<unsigned>(digits);
  if (is_zero()) return "0." + std::string(n, '0');

  const mpq_class magnitude = ::abs(value_);
  long e = decimal_exponent(magnitude);
  const long shift = static_cast<long>(n) - 1 - e;
  mpq_class scaled = magnitude;
  if (shift >= 0) {
    scaled *= mpq_class(pow10(static_cast<unsigned>(shift)));
  } else {
    scaled /= mpq_class(pow10(static_cast<unsigned>(-shift)));
  }
  Integer mantissa = round_half_even(scaled);
  if (mantissa == pow10(n)) {
    mantissa /= 10;
    ++e;
  }
  const std::string d = mantissa.get_str();

  std::string out = sign() < 0 ? "-" : "";
  if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
  } else if (e >= static_cast<long>(n) - 1) {
    out += d + std::string(static_cast<std::size_t>(e - (static_cast<long>(n) - 1)), '0');
  } else {
    const auto point = static_cast<std::size_t>(e + 1);
    out += d.substr(0, point) + "." + d.substr(point);
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer pow3(unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, exponent);
  return r;
}

Integer pow2(unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

Rational inverse_pow3(unsigned exponent) { return Rational(Integer(1), pow3(exponent)); }

}  // namespace cantor
