#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "commat/rational.hpp"

namespace commat {

bool is_prime(int p);
bool is_prime_power(int q);

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
Integer gl_order(int n, int q);

/// Square matrix over the prime field F_p, entries stored row-major and
/// always reduced mod p.
class FqMatrix {
 public:
  FqMatrix(int n, int p);
  /// Decodes the index-th matrix in row-major lexicographic order, i.e. the
  /// base-p digits of index with entry (0,0) most significant.
  static FqMatrix from_index(int n, int p, std::uint64_t index);
  static FqMatrix scalar(int n, int p, int value);

  int n() const { return n_; }
  int p() const { return p_; }
  int at(int r, int c) const { return e_[static_cast<std::size_t>(r * n_ + c)]; }
  void set(int r, int c, int v);

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

  bool commutes_with(const FqMatrix& o) const;
  /// Gaussian elimination over F_p.
  bool is_invertible() const;

 private:
  int n_;
  int p_;
  std::vector<std::uint8_t> e_;
};

/// Commuting N-tuples in gl_n.
struct AffineSpace {
  int dim = 1;
};
/// Commuting N-tuples in GL_n.
struct Torus {
  int dim = 1;
};
/// Matrices M with M - a*I invertible for every avoided value a.
struct PuncturedLine {
  std::vector<int> avoided;
};
using VarietyFamily = std::variant<AffineSpace, Torus, PuncturedLine>;

std::string describe(const VarietyFamily& family);
bool is_curve_family(const VarietyFamily& family);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const Integer& required, std::uint64_t budget);
  const Integer& required() const { return required_; }

 private:
  Integer required_;
};

struct CountOptions {
  std::uint64_t budget = std::uint64_t{1} << 28;
  /// Workers share the search space by the first matrix's first row.
  unsigned threads = 1;
};

/// Number of candidate tuples, p^{N n^2}.
Integer search_space(const VarietyFamily& family, int n, int p);

/// #C_n(X)(F_p) by exhaustive enumeration of N-tuples of pairwise commuting
/// n x n matrices that satisfy the family's unit constraints. The budget is
/// checked before any work starts.
Integer count_points(const VarietyFamily& family, int n, int p, const CountOptions& options = {});

}  // namespace commat
