#pragma once

#include <string>
#include <vector>

#include "commat/ratfunc.hpp"

namespace commat {

/// Power series in t truncated at a fixed order, with RatFunc coefficients
/// (so the overall object is bivariate in (u, t)). Binary operations truncate
/// to the smaller of the two orders. The u-direction is never truncated
/// implicitly; see truncate_u().
class TSeries {
 public:
  /// Zero series of the given order.
  explicit TSeries(int order = 0);
  /// Coefficients of t^0..t^{order}; order = size - 1 (must be non-empty).
  explicit TSeries(std::vector<RatFunc> coeffs);

  static TSeries one(int order);
  /// 1 / (1 - a t) = sum a^k t^k.
  static TSeries geometric(const RatFunc& a, int order);
  /// Expansion of a rational function in t with constant coefficients.
  static TSeries from_ratfunc(const RatFunc& f, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatFunc& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<RatFunc>& coeffs() const { return c_; }

  TSeries operator-() const;
  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const RatFunc& c);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const RatFunc& c) { return a *= c; }
  friend bool operator==(const TSeries&, const TSeries&) = default;

  /// Multiplicative inverse; requires a nonzero constant term.
  TSeries inverse() const;
  /// Integer power, negative exponents via inverse().
  TSeries pow(long e) const;
  /// t -> c t, i.e. the k-th coefficient is multiplied by c^k.
  TSeries scale_t(const RatFunc& c) const;
  TSeries truncate(int order) const;
  /// Replaces every coefficient by its u-expansion modulo u^{max_u_degree+1}.
  TSeries truncate_u(int max_u_degree) const;

  /// One line per t-power: "t^k: <coefficient>".
  std::string to_string(std::string_view var = "u") const;

 private:
  std::vector<RatFunc> c_;
};

}  // namespace commat
