#include "commat/ratfunc.hpp"

#include <stdexcept>

namespace commat {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  *this = RatFunc(std::move(num), std::move(den), Trusted{});
}

RatFunc::RatFunc(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.leading().is_one()) {
    const Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

const Poly& RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("rational function is not a polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    // Common denominator: only a cancellation against den is possible.
    return *this = RatFunc(num_ + o.num_, den_);
  }
  const Poly g = gcd(den_, o.den_);
  if (g.is_one()) {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Trusted{});
    return *this;
  }
  const Poly b = Poly::exact_div(den_, g);
  const Poly d = Poly::exact_div(o.den_, g);
  Poly num = num_ * d + o.num_ * b;
  Poly den = b * o.den_;
  const Poly h = gcd(num, g);
  if (!h.is_one()) {
    num = Poly::exact_div(num, h);
    den = Poly::exact_div(den, h);
  }
  return *this = RatFunc(std::move(num), std::move(den), Trusted{});
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (const Poly g1 = gcd(a, d); !g1.is_one()) {
    a = Poly::exact_div(a, g1);
    d = Poly::exact_div(d, g1);
  }
  if (const Poly g2 = gcd(c, b); !g2.is_one()) {
    c = Poly::exact_div(c, g2);
    b = Poly::exact_div(b, g2);
  }
  return *this = RatFunc(a * c, b * d, Trusted{});
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return *this *= o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return RatFunc(den_, num_, Trusted{});
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const auto ue = static_cast<unsigned>(e);
  return RatFunc(num_.pow(ue), den_.pow(ue), Trusted{});
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) {
    throw PoleError("pole at " + x.to_string() + " of " + to_string());
  }
  return num_.eval(x) / d;
}

RatFunc RatFunc::dilate(int k) const { return RatFunc(num_.dilate(k), den_.dilate(k), Trusted{}); }

RatFunc RatFunc::rescale(const Rational& c) const {
  if (c.is_zero()) return RatFunc(num_.coeff(0) / den_.coeff(0));
  return RatFunc(num_.rescale(c), den_.rescale(c), Trusted{});
}

Poly RatFunc::expand(int order) const {
  if (order < 0) return {};
  if (is_polynomial()) return num_.truncate(order);
  const Rational& d0 = den_.coeff(0);
  if (d0.is_zero()) throw PoleError("power-series expansion at a pole: " + to_string());
  const Rational inv_d0 = Rational(1) / d0;
  // den * s = num, solved term by term.
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1);
  const int dd = den_.degree();
  for (int k = 0; k <= order; ++k) {
    mpq_class acc = num_.coeff(k).value();
    for (int j = 1; j <= std::min(k, dd); ++j) {
      const Rational& dj = den_.coeff(j);
      if (dj.is_zero()) continue;
      acc -= dj.value() * s[static_cast<std::size_t>(k - j)].value();
    }
    s[static_cast<std::size_t>(k)] = Rational(std::move(acc)) * inv_d0;
  }
  return Poly(std::move(s));
}

std::string RatFunc::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace commat
