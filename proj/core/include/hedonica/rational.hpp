#ifndef HEDONICA_RATIONAL_HPP
#define HEDONICA_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hedonica {

/// Exact rational number in canonical (reduced, positive denominator) form.
///
/// Thin value wrapper over GMP's mpq_class. All arithmetic is exact, so
/// ties between utilities are decided without rounding.
class Rational
{
public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "-12", "3.25", "-0.5", "7/3" (whitespace around the token is ignored).
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  bool is_integer() const;
  std::optional<std::int64_t> to_int64() const;
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
  {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hedonica

#endif  // HEDONICA_RATIONAL_HPP
