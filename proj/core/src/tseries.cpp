#include "commat/tseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace commat {

TSeries::TSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries::TSeries(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TSeries TSeries::one(int order) {
  TSeries s(order);
  s.c_[0] = RatFunc(1);
  return s;
}

TSeries TSeries::geometric(const RatFunc& a, int order) {
  TSeries s(order);
  RatFunc power(1);
  for (int k = 0; k <= order; ++k) {
    s.c_[static_cast<std::size_t>(k)] = power;
    if (k < order) power *= a;
  }
  return s;
}

TSeries TSeries::from_ratfunc(const RatFunc& f, int order) {
  const Poly e = f.expand(order);
  TSeries s(order);
  for (int k = 0; k <= order; ++k) s.c_[static_cast<std::size_t>(k)] = RatFunc(e.coeff(k));
  return s;
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TSeries& TSeries::operator*=(const RatFunc& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const int order = std::min(a.order(), b.order());
  TSeries r(order);
  for (int i = 0; i <= order; ++i) {
    const RatFunc& ai = a[i];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      const RatFunc& bj = b[j];
      if (bj.is_zero()) continue;
      r.c_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

TSeries TSeries::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not invertible");
  const RatFunc inv0 = c_[0].inverse();
  TSeries r(order());
  r.c_[0] = inv0;
  for (int k = 1; k <= order(); ++k) {
    RatFunc acc;
    for (int j = 1; j <= k; ++j) {
      const RatFunc& aj = c_[static_cast<std::size_t>(j)];
      if (aj.is_zero()) continue;
      acc += aj * r.c_[static_cast<std::size_t>(k - j)];
    }
    r.c_[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return r;
}

TSeries TSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TSeries result = one(order());
  TSeries base = *this;
  while (e > 0) {
    if (e & 1L) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TSeries TSeries::scale_t(const RatFunc& c) const {
  TSeries r = *this;
  RatFunc power(1);
  for (std::size_t k = 1; k < r.c_.size(); ++k) {
    power *= c;
    r.c_[k] *= power;
  }
  return r;
}

TSeries TSeries::truncate(int order) const {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (order >= this->order()) return *this;
  return TSeries(std::vector<RatFunc>(c_.begin(), c_.begin() + order + 1));
}

TSeries TSeries::truncate_u(int max_u_degree) const {
  TSeries r = *this;
  for (auto& c : r.c_) c = RatFunc(c.expand(max_u_degree));
  return r;
}

std::string TSeries::to_string(std::string_view var) const {
  std::ostringstream os;
  for (std::size_t k = 0; k < c_.size(); ++k) os << "t^" << k << ": " << c_[k].to_string(var) << '\n';
  return os.str();
}

}  // namespace commat
