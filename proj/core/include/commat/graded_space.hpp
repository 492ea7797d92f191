#pragma once

#include <vector>

#include "commat/ratfunc.hpp"

namespace commat {

/// One block of H^*(X): `dim` basis vectors in cohomological degree `degree`
/// on which Frobenius acts by the scalar `eigenvalue`.
struct Stratum {
  int degree = 0;
  int dim = 1;
  Rational eigenvalue = 1;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// Graded cohomology datum of a variety, with a semisimple Frobenius given by
/// its eigenvalues. Canonical form: strata sorted by (degree, eigenvalue),
/// equal keys merged, no zero dimensions.
class GradedSpace {
 public:
  GradedSpace() = default;
  /// Throws std::invalid_argument for a negative degree or dimension.
  explicit GradedSpace(std::vector<Stratum> strata);

  /// Betti data only: b[i] in degree i, every eigenvalue 1.
  static GradedSpace from_betti(const std::vector<int>& betti);

  const std::vector<Stratum>& strata() const { return strata_; }
  bool empty() const { return strata_.empty(); }
  /// Total dimension in degree i.
  int betti(int degree) const;
  /// Betti numbers b_0..b_{max degree}.
  std::vector<int> betti_numbers() const;
  int max_degree() const;

  /// Same Betti numbers with every eigenvalue reset to 1.
  GradedSpace forget_eigenvalues() const;
  /// Concatenation of strata (cohomology of a disjoint union).
  GradedSpace disjoint_union(const GradedSpace& other) const;

  /// sum dim * (-u)^degree.
  Poly poincare_polynomial() const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<Stratum> strata_;
};

}  // namespace commat
