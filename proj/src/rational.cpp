#include "macc/rational.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "macc/errors.hpp"

namespace macc {

namespace {

using i128 = __int128;

i128 gcd_wide(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_integer(std::string_view s) {
  if (s.empty()) throw DomainError("empty integer in fraction string");
  std::string_view digits = s;
  if (digits.front() == '+') digits.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw DomainError("malformed fraction string: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double());
  return buf;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw DomainError("malformed fraction string: '" + std::string(text) + "'");
  }
  std::int64_t n = parse_integer(text.substr(0, slash));
  std::int64_t d = parse_integer(den_text);
  return Rational(n, d);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_wide(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(i128(num_) * o.num_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  *this = from_wide(i128(num_) * o.den_, i128(den_) * o.num_);
  return *this;
}

Rational Rational::operator-() const { return from_wide(-i128(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() > 0) ++q;
  return q;
}

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

Rational positive_part(const Rational& r) { return r < 0 ? Rational(0) : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace macc
