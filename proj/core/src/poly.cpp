#include "commat/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace commat {

namespace {
const Rational kZero{};
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational{});
  p.c_.back() = c;
  return p;
}

Poly Poly::one_minus(int k, const Rational& c) { return Poly(1) - monomial(c, k); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const mpq_class& ai = a.c_[i].value();
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      acc[i + j] += ai * b.c_[j].value();
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  const Rational inv = Rational(1) / leading();
  return *this * inv;
}

Rational Poly::eval(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.value();
    acc += it->value();
  }
  return Rational(std::move(acc));
}

Poly Poly::dilate(int k) const {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  if (k == 1 || is_constant()) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(k)] = c_[i];
  return Poly(std::move(out));
}

Poly Poly::rescale(const Rational& c) const {
  Poly r = *this;
  Rational power = 1;
  for (auto& v : r.c_) {
    v *= power;
    power *= c;
  }
  r.trim();
  return r;
}

Poly Poly::truncate(int max_degree) const {
  if (max_degree < 0) return {};
  if (degree() <= max_degree) return *this;
  return Poly(std::vector<Rational>(c_.begin(), c_.begin() + max_degree + 1));
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<mpq_class> rem;
  rem.reserve(a.c_.size());
  for (const auto& v : a.c_) rem.push_back(v.value());
  const int db = b.degree();
  const mpq_class lead_inv = 1 / b.leading().value();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class& top = rem[static_cast<std::size_t>(k + db)];
    if (sgn(top) == 0) continue;
    const mpq_class factor = top * lead_inv;
    for (int j = 0; j <= db; ++j) {
      if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
      rem[static_cast<std::size_t>(k + j)] -= factor * b.c_[static_cast<std::size_t>(j)].value();
    }
    quot[static_cast<std::size_t>(k)] = Rational(factor);
  }
  rem.resize(static_cast<std::size_t>(db));
  std::vector<Rational> r;
  r.reserve(rem.size());
  for (auto& v : rem) r.emplace_back(std::move(v));
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) {
      if (mag.is_integer()) {
        os << mag << '*';
      } else {
        os << '(' << mag << ")*";
      }
    }
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

Poly q_pochhammer(int n, int k) {
  Poly r(1);
  for (int i = 1; i <= n; ++i) r *= Poly::one_minus(i * k);
  return r;
}

}  // namespace commat
