#pragma once

#include <string>
#include <string_view>

#include "commat/poly.hpp"

namespace commat {

/// Exact univariate rational function num/den in canonical form: den is monic,
/// gcd(num, den) = 1, and zero is 0/1. Equal values have identical
/// representations, so == is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}   // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RatFunc(T c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Normalizes; throws std::domain_error if den is zero.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Throws std::logic_error if the value is not a polynomial.
  const Poly& as_polynomial() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  /// Exact value at x; throws PoleError when den(x) = 0.
  Rational eval(const Rational& x) const;
  /// f(x^k).
  RatFunc dilate(int k) const;
  /// f(c*x).
  RatFunc rescale(const Rational& c) const;

  /// Taylor expansion around 0 modulo x^{order+1}. Requires den(0) != 0.
  Poly expand(int order) const;

  std::string to_string(std::string_view var = "u") const;

 private:
  struct Trusted {};
  // num/den already coprime; only fixes the sign/scale so den is monic.
  RatFunc(Poly num, Poly den, Trusted);

  Poly num_;
  Poly den_;
};

}  // namespace commat
