#pragma once

// Shared helpers for the unit tests: literal builders and seeded generators.

#include <initializer_list>
#include <random>
#include <vector>

#include "commat/graded_space.hpp"
#include "commat/ratfunc.hpp"
#include "commat/symfunc.hpp"

namespace commat::test {

inline Poly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

inline RatFunc rf(const Poly& num, const Poly& den) { return RatFunc(num, den); }

inline Poly u_pow(int k) { return Poly::monomial(1, k); }

inline Poly random_poly(std::mt19937& rng, int max_degree, int max_coeff = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-max_coeff, max_coeff), den(1, 3);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(Integer(coef(rng)), Integer(den(rng)));
  return Poly(std::move(c));
}

inline RatFunc random_ratfunc(std::mt19937& rng, int max_degree = 3) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, max_degree);
  return RatFunc(random_poly(rng, max_degree), den);
}

/// <= 4 strata, degrees <= 4, dims <= 3, eigenvalues in {1, 1/2, 1/3, 2}.
inline GradedSpace random_space(std::mt19937& rng, bool with_eigenvalues = true) {
  static const Rational kEigen[] = {Rational(1), Rational(1, 2), Rational(1, 3), Rational(2)};
  std::uniform_int_distribution<int> count(1, 4), degree(0, 4), dim(1, 3), eig(0, 3);
  std::vector<Stratum> strata;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    strata.push_back(Stratum{degree(rng), dim(rng), with_eigenvalues ? kEigen[eig(rng)] : Rational(1)});
  }
  return GradedSpace(std::move(strata));
}

/// Random degree-n symmetric function with small polynomial-in-u coefficients.
inline SymFunc random_symfunc(std::mt19937& rng, int n) {
  SymFunc::Terms terms;
  std::bernoulli_distribution keep(0.7);
  for (const auto& lambda : partitions_of(n)) {
    if (keep(rng)) terms.emplace(lambda, RatFunc(random_poly(rng, 2)));
  }
  return SymFunc(n, std::move(terms));
}

}  // namespace commat::test
