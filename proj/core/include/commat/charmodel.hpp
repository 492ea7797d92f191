#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "commat/graded_space.hpp"
#include "commat/symfunc.hpp"

namespace commat {

/// A graded (possibly Frobenius-enhanced) S_n character: a degree-n SymFunc
/// whose coefficients are rational functions of the grading variable u.
using GradedChar = SymFunc;

/// Graded trace of F*sigma on V^{(x)n} for sigma of cycle type lambda:
///   prod_i ( sum_alpha (-1)^deg u^{i deg} chi^i )^{a_i}.
/// The signed S_n action is never built; this closed form replaces it.
Poly graded_trace_product(const GradedSpace& v, const Partition& lambda);

/// ch_{F,u}(V^{(x)n}) = sum_lambda tr_u(F sigma_lambda) p_lambda / z_lambda.
GradedChar enhanced_character(const GradedSpace& v, int n);

/// Coefficients t^0..t^max_n of exp( sum_i p_i/i * tr_u(F sigma_(i)) t^i ),
/// expanded with the recurrence n E_n = sum_k tr_(k) p_k E_{n-k}.
std::vector<GradedChar> enhanced_character_series(const GradedSpace& v, int max_n);

/// f^lambda(q) = phi_n(q) sp_q(s_lambda) for every lambda |- n, as exact
/// polynomials in q.
std::map<Partition, Poly> flag_fake_degrees(int n);

/// ch_u(B_n) = sum_lambda f^lambda(u^2) s_lambda.
GradedChar flag_character(int n);

enum class Space { Cn, Sn, Coh, Flag, BGLn };

Space parse_space(std::string_view name);
std::string to_string(Space s);

/// Signed Poincare polynomial/series P_u = sum dim H^i (-u)^i of the chosen
/// space attached to X and n. Eigenvalues of `x` are ignored.
///   Cn, Sn : phi_n(u^2) sp_{u^2}(ch_u(X^n))   (always a polynomial)
///   Coh    : sp_{u^2}(ch_u(X^n))
///   Flag   : prod_{i=1}^n (1 - u^{2i}) / (1 - u^2)
///   BGLn   : 1 / phi_n(u^2)
RatFunc poincare(const GradedSpace& x, int n, Space space);

/// |GL_n(F_q)| * sp_{q^{-1}}(ch_{F,1}(X^n)). Equals #S_n(X)(F_q); equals
/// #C_n(X)(F_q) when X is a smooth curve. Throws PoleError if the
/// specialization has a pole at 1/q.
Rational point_count_Sn(const GradedSpace& x, int n, int q);

}  // namespace commat
