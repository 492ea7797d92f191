#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commat/charmodel.hpp"
#include "commat/graded_space.hpp"
#include "commat/tseries.hpp"

namespace commat {

/// Side-by-side comparison of two truncated generating series.
struct SeriesReport {
  TSeries lhs;
  TSeries rhs;
  int t_order = 0;
  /// Set when both sides were compared modulo u^{u_order+1}.
  std::optional<int> u_order;
  /// First t-power where the sides differ; empty when they agree.
  std::optional<int> first_mismatch;
  /// Number of infinite-product factors materialized on the rhs (0 when the
  /// rhs is evaluated in closed form).
  int factors = 0;
  /// For groupoid series: (I, max_k |rhs_k - partial_I,k|) where partial_I is
  /// the finite product over the first I zeta factors.
  std::vector<std::pair<int, Rational>> convergence;

  bool equal() const { return !first_mismatch.has_value(); }
  /// Two-column coefficient table, one t-power per line, then a verdict line.
  std::string to_string(std::string_view var = "u") const;
};

/// Macdonald's product prod_i (1/(1 - u^i t))^{(-1)^i b_i}, whose t^n
/// coefficient is P_u(Sym^n X). Eigenvalues are ignored.
TSeries betti_zeta(const GradedSpace& x, int t_order);

/// 1 + sum P_u(Coh_n X) t^n against prod_{i>=0} zeta^B_X(u^{2i} t), both
/// reduced modulo (t^{t_order+1}, u^{u_order+1}). Factors with 2i > u_order
/// are congruent to 1 and are skipped.
SeriesReport coh_series(const GradedSpace& x, int t_order, int u_order);

/// Weil zeta function prod_alpha (1/(1 - chi q t))^{(-1)^deg dim} as a
/// rational function in t. The eigenvalue is the arithmetic Frobenius
/// eigenvalue; the factor uses chi*q exactly.
RatFunc weil_zeta(const GradedSpace& x, int q);

/// 1 + sum |S_n(X)(F_q)| / |GL_n(F_q)| t^n via the point-count formula.
TSeries groupoid_lhs(const GradedSpace& x, int q, int t_order);
/// prod_{i>=1} zeta_X(q^{-i} t) in closed form: each eigenvalue contributes
/// prod_{j>=0} (1 - chi q^{-j} t)^{-s} = (sum chi^n t^n / (1/q;1/q)_n)^s.
TSeries groupoid_rhs(const GradedSpace& x, int q, int t_order);
/// The finite product prod_{i=1}^{factors} zeta_X(q^{-i} t).
TSeries groupoid_rhs_partial(const GradedSpace& x, int q, int t_order, int factors);

/// Z_X(t) against prod_{i>=1} zeta_X(q^{-i} t), compared exactly. Reports the
/// gap to finite products at I = 1, 2, 4, ..., 32 factors.
SeriesReport groupoid_series(const GradedSpace& x, int q, int t_order);

struct StableBetti {
  /// lim_n P_u(C_n X) modulo u^{u_order+1}, from the residue at t = 1.
  Poly stable;
  /// Smallest n such that P_u(C_m X) mod u^{u_order+1} is the same for all
  /// m in [n, u_order + 1].
  int stabilized_at = 0;
  /// That stabilized value agrees with `stable`.
  bool agrees = false;
};

/// Stable Betti numbers of C_n(X) as n grows. Requires X connected (b_0 = 1);
/// throws std::invalid_argument otherwise.
StableBetti stable_betti(const GradedSpace& x, int u_order);

}  // namespace commat
