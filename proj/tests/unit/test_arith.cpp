#include <doctest.h>

#include <random>

#include "commat/tseries.hpp"
#include "support.hpp"

using namespace commat;
using commat::test::poly;
using commat::test::u_pow;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational::parse(" -6/4 ") == Rational(-3, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("polynomial rendering is ascending with explicit signs") {
  CHECK(poly({1, -1, 1}).to_string() == "1 - u + u^2");
  CHECK(poly({0, -2, 0, 3}).to_string() == "-2*u + 3*u^3");
  CHECK((Poly::monomial(Rational(-1, 2), 2) + Poly(Rational(1, 3))).to_string() == "1/3 - (1/2)*u^2");
  CHECK(Poly().to_string() == "0");
  CHECK(poly({1, 0, 0}).degree() == 0);
}

TEST_CASE("polynomial division and gcd") {
  const Poly a = poly({1, 0, -1});  // 1 - u^2
  const Poly b = poly({1, -1});     // 1 - u
  auto [q, r] = Poly::divmod(a, b);
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, poly({1, 0, 0, -1})) == poly({-1, 1}));  // monic u - 1
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK_THROWS_AS(Poly::divmod(a, Poly()), std::domain_error);
  CHECK_THROWS_AS(Poly::exact_div(a, poly({2, 1})), std::logic_error);
  CHECK(q_pochhammer(2) == poly({1, -1, -1, 1}));
  CHECK(poly({1, 2}).dilate(3) == poly({1, 0, 0, 2}));
}

TEST_CASE("ratfunc_arith examples") {
  const RatFunc one_minus_q(poly({1, -1}));
  const RatFunc geometric(Poly(1), poly({1, -1}));

  CHECK(geometric * one_minus_q == RatFunc(1));
  CHECK(geometric + RatFunc(Poly(1), poly({1, 1})) == RatFunc(Poly(2), poly({1, 0, -1})));
  CHECK(RatFunc(poly({1, 0, 0, -1})) / one_minus_q == RatFunc(poly({1, 1, 1})));
  CHECK_THROWS_AS(geometric / RatFunc(), std::domain_error);
  CHECK_THROWS_AS(RatFunc(Poly(1), Poly()), std::domain_error);
}

TEST_CASE("ratfunc canonical form") {
  const RatFunc f(poly({2, -2}), poly({4, 0, -4}));  // (2-2q)/(4-4q^2) = 1/(2+2q)
  CHECK(f.den().leading().is_one());
  CHECK(f == RatFunc(Poly(Rational(1, 2)), poly({1, 1})));
  CHECK(RatFunc(Poly(), poly({1, 1})).den() == Poly(1));
  CHECK(RatFunc(Poly(1), poly({1, -1})).to_string() == "(-1)/(-1 + u)");
}

TEST_CASE("ratfunc_eval examples") {
  CHECK(RatFunc(Poly(1), poly({1, -1})).eval(Rational(1, 2)) == Rational(2));
  const RatFunc pole(poly({0, 1}), poly({1, -1}));
  CHECK_THROWS_AS(pole.eval(Rational(1)), PoleError);
  try {
    (void)pole.eval(Rational(1));
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("pole at 1") != std::string::npos);
  }
  // removable singularity disappears under the gcd invariant
  CHECK(RatFunc(poly({1, 0, -1}), poly({1, -1})).eval(Rational(1)) == Rational(2));
}

TEST_CASE("ratfunc expansion around zero") {
  const RatFunc f(Poly(1), poly({1, -1}));
  CHECK(f.expand(4) == poly({1, 1, 1, 1, 1}));
  CHECK(RatFunc(poly({1, 1}), poly({1, 0, -1})).expand(3) == poly({1, 1, 1, 1}));
  CHECK_THROWS_AS(RatFunc(Poly(1), poly({0, 1})).expand(2), PoleError);
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc a = test::random_ratfunc(rng), b = test::random_ratfunc(rng), c = test::random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form is a congruence") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = test::random_poly(rng, 3), c = test::random_poly(rng, 3);
    Poly b, d;
    while (b.is_zero()) b = test::random_poly(rng, 3);
    while (d.is_zero()) d = test::random_poly(rng, 3);
    // shared factor so that a/b == c/d happens often
    if (trial % 2 == 0) {
      const Poly k = test::random_poly(rng, 2);
      if (!k.is_zero()) {
        CHECK(RatFunc(a * k, b * k) == RatFunc(a, b));
      }
    }
    CHECK((RatFunc(a, b) == RatFunc(c, d)) == (a * d == c * b));
  }
}

TEST_CASE("evaluation is multiplicative where defined") {
  std::mt19937 rng(99);
  const Rational points[] = {Rational(0), Rational(1, 2), Rational(-3), Rational(5, 7)};
  int evaluated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc f = test::random_ratfunc(rng), g = test::random_ratfunc(rng);
    for (const auto& x : points) {
      try {
        const Rational fx = f.eval(x), gx = g.eval(x);
        CHECK((f * g).eval(x) == fx * gx);
        ++evaluated;
      } catch (const PoleError&) {
      }
    }
  }
  CHECK(evaluated > 100);
}

TEST_CASE("tseries_mul examples") {
  const TSeries one_plus_t(std::vector<RatFunc>{1, 1, 0});
  const TSeries one_minus_t(std::vector<RatFunc>{1, -1, 0});
  CHECK(one_plus_t * one_minus_t == TSeries(std::vector<RatFunc>{1, 0, -1}));

  const TSeries geo = TSeries::geometric(1, 3);
  CHECK(geo * TSeries(std::vector<RatFunc>{1, -1, 0, 0}) == TSeries::one(3));

  const TSeries prod = TSeries::geometric(RatFunc(u_pow(1)), 2) * TSeries::geometric(1, 2);
  CHECK(prod == TSeries(std::vector<RatFunc>{1, RatFunc(poly({1, 1})), RatFunc(poly({1, 1, 1}))}));
}

TEST_CASE("tseries truncates to the smaller order") {
  const TSeries a = TSeries::geometric(2, 5);
  const TSeries b = TSeries::geometric(3, 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
  CHECK((a * b)[2] == RatFunc(4 + 6 + 9));
}

TEST_CASE("tseries inverse and powers") {
  const TSeries g = TSeries::geometric(RatFunc(u_pow(1)), 4);
  CHECK(g * g.inverse() == TSeries::one(4));
  CHECK(g.pow(-1) == TSeries(std::vector<RatFunc>{1, RatFunc(-u_pow(1)), 0, 0, 0}));
  CHECK(g.pow(3) * g.pow(-3) == TSeries::one(4));
  CHECK_THROWS_AS(TSeries(std::vector<RatFunc>{0, 1}).inverse(), std::domain_error);
}

TEST_CASE("tseries scale_t and truncate_u") {
  const TSeries g = TSeries::geometric(1, 3).scale_t(RatFunc(u_pow(2)));
  CHECK(g[3] == RatFunc(u_pow(6)));
  const TSeries h(std::vector<RatFunc>{RatFunc(Poly(1), poly({1, -1})), RatFunc(poly({1, 2, 3, 4}))});
  const TSeries t = h.truncate_u(2);
  CHECK(t[0] == RatFunc(poly({1, 1, 1})));
  CHECK(t[1] == RatFunc(poly({1, 2, 3})));
}
