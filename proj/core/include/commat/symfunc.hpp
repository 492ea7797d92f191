#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "commat/partition.hpp"
#include "commat/ratfunc.hpp"

namespace commat {

/// Homogeneous symmetric function stored in the power-sum basis with RatFunc
/// coefficients. Zero coefficients are never stored. h- and s-bases exist only
/// as conversions into this representation.
class SymFunc {
 public:
  using Terms = std::map<Partition, RatFunc>;

  /// Zero of the given degree.
  explicit SymFunc(int degree = 0);
  /// Every key must be a partition of `degree`.
  SymFunc(int degree, Terms terms);

  /// The unit p_() = 1 in degree 0.
  static SymFunc one();
  static SymFunc power_sum(const Partition& lambda);
  /// h_lambda = prod_i h_{lambda_i}, h_n = sum_{mu |- n} p_mu / z_mu.
  static SymFunc complete(const Partition& lambda);
  /// s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu.
  static SymFunc schur(const Partition& lambda);
  /// Rebuilds sum_lambda c_lambda s_lambda.
  static SymFunc from_schur(int degree, const Terms& schur_coeffs);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  /// Coefficient of p_lambda (zero if absent).
  RatFunc coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const RatFunc& c);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  /// Induction product: degrees add, p_lambda * p_mu = p_{lambda U mu}.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(SymFunc a, const RatFunc& c) { return a *= c; }
  friend SymFunc operator*(const RatFunc& c, SymFunc a) { return a *= c; }
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  /// Applies f to every coefficient, dropping results that vanish.
  SymFunc map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;

  /// "(1/2)*p[1,1] + (1/2)*p[2]", keys in increasing lexicographic order.
  std::string to_string(std::string_view var = "u") const;

 private:
  int degree_ = 0;
  Terms terms_;
};

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. Memoized; safe to call
/// concurrently. Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// Schur coefficients c_lambda = <f, s_lambda>, zero coefficients omitted.
SymFunc::Terms to_schur(const SymFunc& f);

/// Hall inner product, <p_lambda, p_mu> = delta z_lambda, bilinear over the
/// coefficient field. Functions of different degree pair to 0.
RatFunc hall_inner(const SymFunc& f, const SymFunc& g);

/// Principal specialization f(1, q, q^2, ...) with q := x^power, where x is
/// the variable of f's coefficients. The ring map sends p_k to 1/(1 - q^k).
RatFunc principal_spec(const SymFunc& f, int power = 1);

/// "s[2] + u^2*s[1,1]", partitions in reverse-lexicographic order.
std::string schur_to_string(const SymFunc::Terms& schur_coeffs, std::string_view var = "u");

}  // namespace commat
