#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commat/rational.hpp"

namespace commat {

/// Dense univariate polynomial over Q. The coefficient vector never carries
/// trailing zeros, so the zero polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Poly(T c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }
  /// 1 - c*x^k
  static Poly one_minus(int k, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Coefficient of x^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const Rational& leading() const { return coeff(degree()); }
  std::span<const Rational> coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned e) const;
  Poly monic() const;
  Rational eval(const Rational& x) const;
  /// p(x^k).
  Poly dilate(int k) const;
  /// p(c*x).
  Poly rescale(const Rational& c) const;
  /// Drops all terms of degree > max_degree.
  Poly truncate(int max_degree) const;
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;
  bool has_integer_coefficients() const;

  /// Quotient and remainder; throws std::domain_error when dividing by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// a / b, throwing std::logic_error when b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);

  /// Ascending-degree rendering, e.g. "1 - u + u^2".
  std::string to_string(std::string_view var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// prod_{i=1}^n (1 - x^{k i}), i.e. phi_n(x^k).
Poly q_pochhammer(int n, int k = 1);

}  // namespace commat
