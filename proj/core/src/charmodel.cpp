#include "commat/charmodel.hpp"

#include <stdexcept>

#include "commat/oracle.hpp"

namespace commat {

namespace {

// sum_alpha (-1)^deg u^{i deg} chi^i, weighted by stratum dimension.
Poly power_trace(const GradedSpace& v, int i) {
  Poly s;
  for (const auto& st : v.strata()) {
    Rational c = st.eigenvalue.pow(i) * Rational(st.dim);
    if (st.degree % 2 == 1) c = -c;
    s += Poly::monomial(c, i * st.degree);
  }
  return s;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be nonnegative");
}

}  // namespace

Poly graded_trace_product(const GradedSpace& v, const Partition& lambda) {
  Poly result(1);
  for (int i = 1; i <= lambda.largest(); ++i) {
    const int a = lambda.multiplicity(i);
    if (a == 0) continue;
    result *= power_trace(v, i).pow(static_cast<unsigned>(a));
  }
  return result;
}

GradedChar enhanced_character(const GradedSpace& v, int n) {
  require_nonnegative(n, "enhanced_character");
  SymFunc::Terms terms;
  for (const auto& lambda : partitions_of(n)) {
    Poly tr = graded_trace_product(v, lambda);
    if (tr.is_zero()) continue;
    terms.emplace(lambda, RatFunc(tr * Rational(Integer(1), lambda.z())));
  }
  return SymFunc(n, std::move(terms));
}

std::vector<GradedChar> enhanced_character_series(const GradedSpace& v, int max_n) {
  require_nonnegative(max_n, "enhanced_character_series");
  std::vector<GradedChar> e;
  e.reserve(static_cast<std::size_t>(max_n) + 1);
  e.push_back(SymFunc::one());
  std::vector<SymFunc> weighted_p;  // tr_(k) p_k, k = 1..max_n
  for (int k = 1; k <= max_n; ++k) {
    weighted_p.push_back(SymFunc::power_sum(Partition({k})) * RatFunc(power_trace(v, k)));
  }
  for (int n = 1; n <= max_n; ++n) {
    SymFunc acc(n);
    for (int k = 1; k <= n; ++k) {
      const SymFunc& prev = e[static_cast<std::size_t>(n - k)];
      if (prev.is_zero()) continue;
      acc += weighted_p[static_cast<std::size_t>(k - 1)] * prev;
    }
    e.push_back(acc * RatFunc(Rational(1, n)));
  }
  return e;
}

std::map<Partition, Poly> flag_fake_degrees(int n) {
  require_nonnegative(n, "flag_fake_degrees");
  const RatFunc phi(q_pochhammer(n));
  std::map<Partition, Poly> out;
  for (const auto& lambda : partitions_of(n)) {
    const RatFunc f = phi * principal_spec(SymFunc::schur(lambda));
    out.emplace(lambda, f.as_polynomial());
  }
  return out;
}

GradedChar flag_character(int n) {
  SymFunc::Terms schur;
  for (auto& [lambda, f] : flag_fake_degrees(n)) schur.emplace(lambda, RatFunc(f.dilate(2)));
  return SymFunc::from_schur(n, schur);
}

Space parse_space(std::string_view name) {
  if (name == "cn" || name == "Cn") return Space::Cn;
  if (name == "sn" || name == "Sn") return Space::Sn;
  if (name == "coh" || name == "Coh") return Space::Coh;
  if (name == "flag") return Space::Flag;
  if (name == "bgln" || name == "BGLn") return Space::BGLn;
  throw std::invalid_argument("unknown space '" + std::string(name) + "' (expected cn, sn, coh, flag, bgln)");
}

std::string to_string(Space s) {
  switch (s) {
    case Space::Cn: return "cn";
    case Space::Sn: return "sn";
    case Space::Coh: return "coh";
    case Space::Flag: return "flag";
    case Space::BGLn: return "bgln";
  }
  return "?";
}

RatFunc poincare(const GradedSpace& x, int n, Space space) {
  require_nonnegative(n, "poincare");
  const Poly phi = q_pochhammer(n, 2);
  switch (space) {
    case Space::Flag: {
      Poly p(1);
      for (int i = 1; i <= n; ++i) p *= Poly::exact_div(Poly::one_minus(2 * i), Poly::one_minus(2));
      return RatFunc(p);
    }
    case Space::BGLn:
      return RatFunc(Poly(1), phi);
    case Space::Coh:
      return principal_spec(enhanced_character(x.forget_eigenvalues(), n), 2);
    case Space::Cn:
    case Space::Sn: {
      const RatFunc p = RatFunc(phi) * principal_spec(enhanced_character(x.forget_eigenvalues(), n), 2);
      if (!p.is_polynomial()) {
        throw std::logic_error("internal error: Poincare polynomial is not a polynomial: " + p.to_string());
      }
      return p;
    }
  }
  throw std::invalid_argument("unknown space");
}

Rational point_count_Sn(const GradedSpace& x, int n, int q) {
  if (n < 1) throw std::invalid_argument("point_count_Sn: n must be positive");
  if (!is_prime_power(q)) throw std::invalid_argument("point_count_Sn: q must be a prime power");
  const SymFunc ch1 = enhanced_character(x, n).map_coefficients(
      [](const RatFunc& c) { return RatFunc(c.eval(Rational(1))); });
  const Rational sp = principal_spec(ch1).eval(Rational(1, q));
  return Rational(gl_order(n, q)) * sp;
}

}  // namespace commat
