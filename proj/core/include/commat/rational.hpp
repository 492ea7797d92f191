#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace commat {

using Integer = mpz_class;

/// Raised when evaluating a rational function at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v);

  /// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Integer power; negative exponents invert (throws on 0^-k).
  Rational pow(long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned e);

}  // namespace commat
