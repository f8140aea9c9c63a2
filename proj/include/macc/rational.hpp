#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace macc {

// Exact fraction num/den over 64-bit integers.
//
// Always normalized: den > 0 and gcd(|num|, den) == 1. Intermediate products
// are formed in 128 bits; a result that does not fit back into 64 bits throws
// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const;

  // "7/3", "-2/5", or "3" for integers.
  std::string to_string() const;
  // 12 significant digits, e.g. "2.33333333333".
  std::string to_decimal() const;

  // Accepts "a", "a/b" and a leading sign; whitespace is not allowed.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);
Rational abs(const Rational& r);
// (x)^+ = max(0, x)
Rational positive_part(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace macc
