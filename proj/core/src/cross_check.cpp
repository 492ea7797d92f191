#include "commat/cross_check.hpp"

#include <sstream>
#include <stdexcept>

#include "commat/charmodel.hpp"
#include "commat/series.hpp"

namespace commat {

bool CrossCheckReport::passed() const {
  const Rational count(oracle_count);
  return formula_count == count && lhs_count == count && rhs_count == count;
}

std::string CrossCheckReport::to_string() const {
  std::ostringstream os;
  os << family << " n=" << n << " q=" << q << ": oracle=" << oracle_count << " formula=" << formula_count
     << " lhs=" << lhs_count << " rhs=" << rhs_count << " -> " << (passed() ? "pass" : "FAIL");
  return os.str();
}

CrossCheckReport cross_check(const VarietyFamily& family, int n, int q, const GradedSpace& x,
                             const CountOptions& options) {
  if (!is_curve_family(family)) {
    throw std::invalid_argument("cross_check: " + describe(family) + " is not a curve family");
  }
  CrossCheckReport r;
  r.family = describe(family);
  r.n = n;
  r.q = q;
  r.oracle_count = count_points(family, n, q, options);
  r.formula_count = point_count_Sn(x, n, q);
  const Rational gl(gl_order(n, q));
  r.lhs_count = groupoid_lhs(x, q, n)[n].eval(0) * gl;
  r.rhs_count = groupoid_rhs(x, q, n)[n].eval(0) * gl;
  return r;
}

}  // namespace commat
