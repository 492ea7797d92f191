#pragma once

#include <string>

#include "commat/graded_space.hpp"
#include "commat/oracle.hpp"

namespace commat {

/// Four routes to #C_n(X)(F_q) for a curve family: brute-force enumeration,
/// the S_n(X) point-count formula, and |GL_n(F_q)| times the t^n coefficient
/// of each side of the groupoid product formula.
struct CrossCheckReport {
  std::string family;
  int n = 0;
  int q = 0;
  Integer oracle_count;
  Rational formula_count;
  Rational lhs_count;
  Rational rhs_count;

  bool passed() const;
  std::string to_string() const;
};

/// Throws std::invalid_argument for a non-curve family; other errors
/// (budget, poles) propagate.
CrossCheckReport cross_check(const VarietyFamily& family, int n, int q, const GradedSpace& x,
                             const CountOptions& options = {});

}  // namespace commat
