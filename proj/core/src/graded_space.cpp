#include "commat/graded_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace commat {

GradedSpace::GradedSpace(std::vector<Stratum> strata) {
  for (const auto& s : strata) {
    if (s.degree < 0) throw std::invalid_argument("stratum degree must be nonnegative");
    if (s.dim < 0) throw std::invalid_argument("stratum dimension must be nonnegative");
  }
  std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.eigenvalue < b.eigenvalue;
  });
  for (auto& s : strata) {
    if (s.dim == 0) continue;
    if (!strata_.empty() && strata_.back().degree == s.degree && strata_.back().eigenvalue == s.eigenvalue) {
      strata_.back().dim += s.dim;
    } else {
      strata_.push_back(std::move(s));
    }
  }
}

GradedSpace GradedSpace::from_betti(const std::vector<int>& betti) {
  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    strata.push_back(Stratum{static_cast<int>(i), betti[i], Rational(1)});
  }
  return GradedSpace(std::move(strata));
}

int GradedSpace::betti(int degree) const {
  int total = 0;
  for (const auto& s : strata_) {
    if (s.degree == degree) total += s.dim;
  }
  return total;
}

std::vector<int> GradedSpace::betti_numbers() const {
  std::vector<int> b(static_cast<std::size_t>(max_degree() + 1), 0);
  for (const auto& s : strata_) b[static_cast<std::size_t>(s.degree)] += s.dim;
  return b;
}

int GradedSpace::max_degree() const { return strata_.empty() ? -1 : strata_.back().degree; }

GradedSpace GradedSpace::forget_eigenvalues() const {
  std::vector<Stratum> strata = strata_;
  for (auto& s : strata) s.eigenvalue = 1;
  return GradedSpace(std::move(strata));
}

GradedSpace GradedSpace::disjoint_union(const GradedSpace& other) const {
  std::vector<Stratum> strata = strata_;
  strata.insert(strata.end(), other.strata_.begin(), other.strata_.end());
  return GradedSpace(std::move(strata));
}

Poly GradedSpace::poincare_polynomial() const {
  Poly p;
  for (const auto& s : strata_) {
    p += Poly::monomial(s.degree % 2 == 0 ? Rational(s.dim) : Rational(-s.dim), s.degree);
  }
  return p;
}

}  // namespace commat
