#include "commat/series.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "commat/oracle.hpp"

namespace commat {

namespace {

void require_order(int order, const char* what) {
  if (order < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

std::optional<int> first_difference(const TSeries& a, const TSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k) {
    if (!(a[k] == b[k])) return k;
  }
  return std::nullopt;
}

// (1 - a t)^{-exponent} to the given order.
TSeries factor_power(const RatFunc& a, long exponent, int order) {
  return TSeries::geometric(a, order).pow(exponent);
}

RatFunc u_power(int k) { return RatFunc(Poly::monomial(1, k)); }

}  // namespace

std::string SeriesReport::to_string(std::string_view var) const {
  std::vector<std::string> left, right;
  std::size_t width = 3;
  for (int k = 0; k <= t_order; ++k) {
    left.push_back(lhs[k].to_string(var));
    right.push_back(rhs[k].to_string(var));
    width = std::max(width, left.back().size());
  }
  std::ostringstream os;
  os << "t^k  " << std::left << std::setw(static_cast<int>(width)) << "lhs" << "  rhs\n";
  for (int k = 0; k <= t_order; ++k) {
    std::ostringstream idx;
    idx << "t^" << k;
    os << std::left << std::setw(5) << idx.str() << std::setw(static_cast<int>(width))
       << left[static_cast<std::size_t>(k)] << "  " << right[static_cast<std::size_t>(k)] << '\n';
  }
  for (const auto& [factors_used, gap] : convergence) {
    os << "partial product with " << factors_used << " factors: max gap " << gap << '\n';
  }
  os << "verdict: ";
  if (equal()) {
    os << "equal";
  } else {
    os << "mismatch at t^" << *first_mismatch;
  }
  os << " (t-order " << t_order;
  if (u_order) os << ", u-order " << *u_order;
  os << ")\n";
  return os.str();
}

TSeries betti_zeta(const GradedSpace& x, int t_order) {
  require_order(t_order, "t-order");
  TSeries z = TSeries::one(t_order);
  const auto betti = x.betti_numbers();
  for (std::size_t i = 0; i < betti.size(); ++i) {
    const int b = betti[i];
    if (b == 0) continue;
    const long exponent = (i % 2 == 0) ? b : -static_cast<long>(b);
    z = z * factor_power(u_power(static_cast<int>(i)), exponent, t_order);
  }
  return z;
}

SeriesReport coh_series(const GradedSpace& x, int t_order, int u_order) {
  require_order(t_order, "t-order");
  require_order(u_order, "u-order");
  const GradedSpace betti_only = x.forget_eigenvalues();

  std::vector<RatFunc> lhs_coeffs{RatFunc(1)};
  for (int n = 1; n <= t_order; ++n) lhs_coeffs.push_back(poincare(betti_only, n, Space::Coh));
  const TSeries lhs = TSeries(std::move(lhs_coeffs)).truncate_u(u_order);

  const int factors = u_order / 2 + 1;  // smallest I with 2I > u_order
  const TSeries zeta = betti_zeta(betti_only, t_order);
  TSeries rhs = TSeries::one(t_order);
  for (int i = 0; i < factors; ++i) rhs = rhs * zeta.scale_t(u_power(2 * i));
  rhs = rhs.truncate_u(u_order);

  SeriesReport report{lhs, rhs, t_order, u_order, first_difference(lhs, rhs), factors, {}};
  return report;
}

RatFunc weil_zeta(const GradedSpace& x, int q) {
  if (!is_prime_power(q)) throw std::invalid_argument("weil_zeta: q must be a prime power");
  Poly num(1), den(1);
  for (const auto& s : x.strata()) {
    const Poly factor = Poly::one_minus(1, s.eigenvalue * Rational(q)).pow(static_cast<unsigned>(s.dim));
    if (s.degree % 2 == 0) {
      den *= factor;
    } else {
      num *= factor;
    }
  }
  return RatFunc(num, den);
}

TSeries groupoid_lhs(const GradedSpace& x, int q, int t_order) {
  require_order(t_order, "t-order");
  std::vector<RatFunc> c{RatFunc(1)};
  for (int n = 1; n <= t_order; ++n) {
    c.push_back(RatFunc(point_count_Sn(x, n, q) / Rational(gl_order(n, q))));
  }
  return TSeries(std::move(c));
}

TSeries groupoid_rhs(const GradedSpace& x, int q, int t_order) {
  require_order(t_order, "t-order");
  if (!is_prime_power(q)) throw std::invalid_argument("groupoid_rhs: q must be a prime power");
  const Rational inv_q(1, q);
  TSeries rhs = TSeries::one(t_order);
  for (const auto& s : x.strata()) {
    // sum_n chi^n t^n / (x;x)_n with x = 1/q
    std::vector<RatFunc> euler;
    Rational pochhammer = 1;
    for (int n = 0; n <= t_order; ++n) {
      if (n > 0) pochhammer *= Rational(1) - inv_q.pow(n);
      euler.emplace_back(s.eigenvalue.pow(n) / pochhammer);
    }
    const long exponent = (s.degree % 2 == 0) ? s.dim : -static_cast<long>(s.dim);
    rhs = rhs * TSeries(std::move(euler)).pow(exponent);
  }
  return rhs;
}

TSeries groupoid_rhs_partial(const GradedSpace& x, int q, int t_order, int factors) {
  require_order(t_order, "t-order");
  if (factors < 0) throw std::invalid_argument("factor count must be nonnegative");
  const RatFunc zeta = weil_zeta(x, q);
  TSeries product = TSeries::one(t_order);
  for (int i = 1; i <= factors; ++i) {
    product = product * TSeries::from_ratfunc(zeta.rescale(Rational(1, q).pow(i)), t_order);
  }
  return product;
}

SeriesReport groupoid_series(const GradedSpace& x, int q, int t_order) {
  const TSeries lhs = groupoid_lhs(x, q, t_order);
  const TSeries rhs = groupoid_rhs(x, q, t_order);
  SeriesReport report{lhs, rhs, t_order, std::nullopt, first_difference(lhs, rhs), 0, {}};
  for (int factors = 1; factors <= 32; factors *= 2) {
    const TSeries partial = groupoid_rhs_partial(x, q, t_order, factors);
    Rational gap = 0;
    for (int k = 0; k <= t_order; ++k) {
      const Rational diff = (rhs[k] - partial[k]).eval(Rational(0)).abs();
      gap = std::max(gap, diff);
    }
    report.convergence.emplace_back(factors, gap);
  }
  return report;
}

StableBetti stable_betti(const GradedSpace& x, int u_order) {
  require_order(u_order, "u-order");
  const GradedSpace betti_only = x.forget_eigenvalues();
  if (betti_only.betti(0) != 1) {
    throw std::invalid_argument("stable_betti requires a connected variety (b_0 = 1), got b_0 = " +
                                std::to_string(betti_only.betti(0)));
  }
  // Residue at t = 1: drop the 1/(1 - t) factor of prod_i zeta^B(u^{2i} t) and
  // evaluate the rest at t = 1. Each remaining factor carries at least u^1 per
  // power of t, so coefficients of t^m with m > u_order vanish mod u^{u_order+1}.
  const int t_order = u_order;
  const auto betti = betti_only.betti_numbers();
  TSeries g = TSeries::one(t_order);
  for (int i = 0; 2 * i <= u_order; ++i) {
    for (std::size_t k = 0; k < betti.size(); ++k) {
      const int b = betti[k];
      if (b == 0 || (i == 0 && k == 0)) continue;
      const long exponent = (k % 2 == 0) ? b : -static_cast<long>(b);
      g = g * factor_power(u_power(static_cast<int>(k) + 2 * i), exponent, t_order).truncate_u(u_order);
    }
  }
  RatFunc at_one;
  for (int m = 0; m <= t_order; ++m) at_one += g[m];
  const Poly stable = (RatFunc(q_pochhammer(u_order / 2 + 1, 2)) * at_one).expand(u_order);

  std::vector<Poly> p;  // p[n-1] = P_u(C_n) mod u^{u_order+1}
  for (int n = 1; n <= u_order + 1; ++n) p.push_back(poincare(betti_only, n, Space::Cn).expand(u_order));
  int stabilized_at = u_order + 1;
  while (stabilized_at > 1 && p[static_cast<std::size_t>(stabilized_at - 2)] == p.back()) --stabilized_at;
  return StableBetti{stable, stabilized_at, p.back() == stable};
}

}  // namespace commat
