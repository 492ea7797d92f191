#include "commat/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace commat {

SymFunc::SymFunc(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("symmetric function degree must be nonnegative");
}

SymFunc::SymFunc(int degree, Terms terms) : SymFunc(degree) {
  for (auto& [lambda, c] : terms) {
    if (lambda.size() != degree) {
      throw std::invalid_argument("term " + lambda.to_string() + " does not have degree " + std::to_string(degree));
    }
    if (!c.is_zero()) terms_.emplace(lambda, std::move(c));
  }
}

SymFunc SymFunc::one() { return power_sum(Partition()); }

SymFunc SymFunc::power_sum(const Partition& lambda) {
  SymFunc f(lambda.size());
  f.terms_.emplace(lambda, RatFunc(1));
  return f;
}

namespace {

SymFunc complete_single(int n) {
  SymFunc::Terms terms;
  for (const auto& mu : partitions_of(n)) terms.emplace(mu, RatFunc(Rational(Integer(1), mu.z())));
  return SymFunc(n, std::move(terms));
}

}  // namespace

SymFunc SymFunc::complete(const Partition& lambda) {
  SymFunc f = one();
  for (int part : lambda.parts()) f = f * complete_single(part);
  return f;
}

SymFunc SymFunc::schur(const Partition& lambda) {
  const int n = lambda.size();
  Terms terms;
  for (const auto& mu : partitions_of(n)) {
    const std::int64_t chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    terms.emplace(mu, RatFunc(Rational(Integer(static_cast<long>(chi)), mu.z())));
  }
  return SymFunc(n, std::move(terms));
}

SymFunc SymFunc::from_schur(int degree, const Terms& schur_coeffs) {
  SymFunc f(degree);
  for (const auto& [lambda, c] : schur_coeffs) f += schur(lambda) * c;
  return f;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? RatFunc() : it->second;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [_, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) return *this = o;
  if (degree_ != o.degree_) throw std::invalid_argument("adding symmetric functions of different degree");
  for (const auto& [lambda, c] : o.terms_) {
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
      terms_.emplace(lambda, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r(a.degree_ + b.degree_);
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      const Partition key = la.join(lb);
      RatFunc prod = ca * cb;
      auto it = r.terms_.find(key);
      if (it == r.terms_.end()) {
        r.terms_.emplace(key, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

SymFunc SymFunc::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  Terms out;
  for (const auto& [lambda, c] : terms_) out.emplace(lambda, f(c));
  return SymFunc(degree_, std::move(out));
}

namespace {

// Renders coeff*basis[...] as a signed term; returns the sign-stripped text
// and whether a leading minus is needed.
std::pair<bool, std::string> render_term(const RatFunc& c, const std::string& basis, std::string_view var) {
  if (c.is_polynomial()) {
    const Poly& p = c.as_polynomial();
    const int lo = p.valuation();
    if (lo == p.degree()) {
      // single monomial
      const Rational& k = p.coeff(lo);
      const bool neg = k.sign() < 0;
      const Rational mag = k.abs();
      std::string s;
      if (lo == 0) {
        if (!mag.is_one()) s = mag.is_integer() ? mag.to_string() + "*" : "(" + mag.to_string() + ")*";
      } else {
        s = Poly::monomial(mag, lo).to_string(var) + "*";
      }
      return {neg, s + basis};
    }
  }
  return {false, "(" + c.to_string(var) + ")*" + basis};
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, s] = terms[i];
    if (i == 0) {
      out += neg ? "-" + s : s;
    } else {
      out += (neg ? " - " : " + ") + s;
    }
  }
  return out;
}

std::string bracket(char letter, const Partition& lambda) {
  std::string s(1, letter);
  s += '[';
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda[i]);
  }
  return s + ']';
}

}  // namespace

std::string SymFunc::to_string(std::string_view var) const {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [lambda, c] : terms_) terms.push_back(render_term(c, bracket('p', lambda), var));
  return join_terms(terms);
}

std::string schur_to_string(const SymFunc::Terms& schur_coeffs, std::string_view var) {
  std::vector<std::pair<bool, std::string>> terms;
  for (auto it = schur_coeffs.rbegin(); it != schur_coeffs.rend(); ++it) {
    if (it->second.is_zero()) continue;
    terms.push_back(render_term(it->second, bracket('s', it->first), var));
  }
  return join_terms(terms);
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one
// bead from position b to the empty position b - k, with sign (-1)^(beads
// strictly between).

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet to_beta(const Partition& lambda) {
  const int len = lambda.length();
  BetaSet beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);
  return beta;
}

Partition from_beta(BetaSet beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, std::int64_t> values;
};

CharacterMemo& memo() {
  static CharacterMemo m;
  return m;
}

std::int64_t mn_recursive(const Partition& lambda, const Partition& mu) {
  if (mu.length() == 0) return lambda.size() == 0 ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(memo().mutex);
    const auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }
  const int k = mu[0];
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const BetaSet beta = to_beta(lambda);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - k;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > to && b < from) ++between;
    }
    BetaSet moved = beta;
    moved[i] = to;
    const std::int64_t sub = mn_recursive(from_beta(std::move(moved)), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  {
    std::unique_lock lock(memo().mutex);
    memo().values.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: " + lambda.to_string() + " and " + mu.to_string() +
                                " are partitions of different integers");
  }
  return mn_recursive(lambda, mu);
}

SymFunc::Terms to_schur(const SymFunc& f) {
  SymFunc::Terms out;
  if (f.is_zero()) return out;
  for (const auto& lambda : partitions_of(f.degree())) {
    RatFunc c = hall_inner(f, SymFunc::schur(lambda));
    if (!c.is_zero()) out.emplace(lambda, std::move(c));
  }
  return out;
}

RatFunc hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) return RatFunc();
  RatFunc acc;
  const auto& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
  const auto& large = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
  for (const auto& [lambda, c] : small) {
    const auto it = large.find(lambda);
    if (it == large.end()) continue;
    acc += c * it->second * RatFunc(Rational(lambda.z()));
  }
  return acc;
}

RatFunc principal_spec(const SymFunc& f, int power) {
  if (power < 1) throw std::invalid_argument("principal_spec: power must be positive");
  const int n = f.degree();
  // Every prod_i (1 - q^{lambda_i}) divides phi_n(q), so sum over the common
  // denominator phi_n(q) and reduce once at the end.
  const Poly phi = q_pochhammer(n);
  RatFunc numerator;
  for (const auto& [lambda, c] : f.terms()) {
    Poly denom(1);
    for (int part : lambda.parts()) denom *= Poly::one_minus(part);
    const Poly cofactor = Poly::exact_div(phi, denom).dilate(power);
    numerator += c * RatFunc(cofactor);
  }
  return numerator / RatFunc(phi.dilate(power));
}

}  // namespace commat
