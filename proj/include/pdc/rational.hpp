// Exact rational arithmetic with total (meadow) division: inv(0) == 0.
//
// Values are always held in lowest terms with a positive denominator.
// operator/ is meadow division, x / y == x * inv(y), so x / 0 == 0.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pdc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long long num, long long den);
  Rational(BigInt num, BigInt den);
  explicit Rational(BigRat v) : v_(std::move(v)) {}

  // Accepts "p", "p/q" and a leading '-'; q must be a positive integer.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational inv() const;  // total inverse: inv(0) == 0
  Rational abs() const { return sign() < 0 ? Rational(BigRat(-v_)) : *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this *= o.inv(); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(BigRat(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Lowest terms, denominator omitted when 1: "3", "-7/2".
  std::string str() const;

 private:
  BigRat v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pdc
