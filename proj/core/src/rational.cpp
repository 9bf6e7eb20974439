#include "hedonica/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hedonica {

namespace {

mpz_class
from_int64(std::int64_t v)
{
  return mpz_class(std::to_string(v));
}

bool
all_digits(std::string_view s)
{
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

std::string_view
trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

mpz_class
parse_integer(std::string_view s, std::string_view whole)
{
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(std::int64_t value)
  : value_(from_int64(value))
{
}

Rational::Rational(std::int64_t num, std::int64_t den)
  : value_(from_int64(num), from_int64(den))
{
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  value_.canonicalize();
}

Rational::Rational(mpq_class value)
  : value_(std::move(value))
{
  value_.canonicalize();
}

Rational
Rational::parse(std::string_view text)
{
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) {
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
  }

  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)) ||
      (dot != std::string_view::npos && frac_part.empty())) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  std::string digits(int_part);
  digits += frac_part;
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  if (negative) {
    num = -num;
  }
  return Rational(mpq_class(num, den));
}

std::string
Rational::to_string() const
{
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool
Rational::is_integer() const
{
  return value_.get_den() == 1;
}

std::optional<std::int64_t>
Rational::to_int64() const
{
  if (!is_integer()) {
    return std::nullopt;
  }
  const mpz_class& num = value_.get_num();
  if (num < mpz_class(std::to_string(std::numeric_limits<std::int64_t>::min())) ||
      num > mpz_class(std::to_string(std::numeric_limits<std::int64_t>::max()))) {
    return std::nullopt;
  }
  return std::stoll(num.get_str());
}

Rational&
Rational::operator+=(const Rational& rhs)
{
  value_ += rhs.value_;
  return *this;
}

Rational&
Rational::operator-=(const Rational& rhs)
{
  value_ -= rhs.value_;
  return *this;
}

Rational&
Rational::operator*=(const Rational& rhs)
{
  value_ *= rhs.value_;
  return *this;
}

Rational
Rational::operator-() const
{
  return Rational(mpq_class(-value_));
}

std::ostream&
operator<<(std::ostream& os, const Rational& r)
{
  return os << r.to_string();
}

}  // namespace hedonica
