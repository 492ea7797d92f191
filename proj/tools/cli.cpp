#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "commat/charmodel.hpp"
#include "commat/cross_check.hpp"
#include "commat/oracle.hpp"
#include "commat/series.hpp"
#include "commat/variety.hpp"
#include "commat/verify.hpp"

namespace commat::cli {

namespace {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("COMMAT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("COMMAT_BUDGET is not a nonnegative integer: '") + env + "'");
    }
  }
  return kDefaultBudget;
}

Poly absolute(const Poly& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c) v = v.abs();
  return Poly(std::move(c));
}

std::string render(const RatFunc& f, bool abs_coeffs) {
  if (!abs_coeffs) return f.to_string();
  return RatFunc(absolute(f.num()), absolute(f.den())).to_string();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

struct PoincareArgs {
  std::string space = "cn";
  std::string variety = "affine";
  int n = 1;
  bool abs = false;
};

struct CharArgs {
  int flag = 0;
  std::string variety;
  int n = 1;
  std::optional<int> q;
};

struct SeriesArgs {
  std::string kind = "coh";
  std::string variety = "affine";
  int t_order = 4;
  int u_order = 12;
  int q = 2;
};

struct CountArgs {
  std::string family;
  std::string variety;
  int dim = 1;
  int n = 1;
  int q = 2;
  std::string avoid = "0,1";
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> q;
};

int run_poincare(const PoincareArgs& a, std::ostream& out, std::ostream& err) {
  const VarietyDescriptor d = find_variety(a.variety);
  const RatFunc p = poincare(d.betti_space(), a.n, parse_space(a.space));
  if (a.abs) err << "warning: printing absolute values of coefficients; signs follow P_u = sum dim H^i (-u)^i\n";
  out << render(p, a.abs) << '\n';
  return 0;
}

int run_char(const CharArgs& a, std::ostream& out) {
  GradedChar ch;
  if (a.flag > 0) {
    ch = flag_character(a.flag);
  } else {
    if (a.variety.empty()) throw std::invalid_argument("char: give --flag N or --variety V -n N");
    const VarietyDescriptor d = find_variety(a.variety);
    ch = enhanced_character(a.q ? d.resolve(*a.q) : d.betti_space(), a.n);
  }
  out << "schur: " << schur_to_string(to_schur(ch)) << '\n';
  out << "p: " << ch.to_string() << '\n';
  return 0;
}

int run_series(const SeriesArgs& a, std::ostream& out, std::ostream& err) {
  const VarietyDescriptor d = find_variety(a.variety);
  if (a.kind == "betti") {
    out << betti_zeta(d.betti_space(), a.t_order).to_string();
    return 0;
  }
  if (a.kind == "coh") {
    const SeriesReport r = coh_series(d.betti_space(), a.t_order, a.u_order);
    out << r.to_string();
    return r.equal() ? 0 : 1;
  }
  if (a.kind == "groupoid") {
    if (!d.family) {
      err << "warning: " << (d.name.empty() ? a.variety : d.name)
          << " is not a built-in smooth curve; the product formula is only asserted for curves\n";
    }
    const SeriesReport r = groupoid_series(d.resolve(a.q), a.q, a.t_order);
    out << r.to_string();
    return r.equal() ? 0 : 1;
  }
  if (a.kind == "stable") {
    const StableBetti s = stable_betti(d.betti_space(), a.u_order);
    out << "stable: " << s.stable.to_string() << '\n';
    out << "stabilized at n = " << s.stabilized_at << '\n';
    out << "verdict: " << (s.agrees ? "equal" : "mismatch") << " (u-order " << a.u_order << ")\n";
    return s.agrees ? 0 : 1;
  }
  throw std::invalid_argument("unknown series kind '" + a.kind + "' (expected coh, betti, groupoid, stable)");
}

VarietyFamily make_family(const CountArgs& a) {
  if (a.family == "affine") return AffineSpace{a.dim};
  if (a.family == "torus") return Torus{a.dim};
  if (a.family == "punctured") return PuncturedLine{parse_int_list(a.avoid)};
  throw std::invalid_argument("unknown family '" + a.family + "' (expected affine, torus, punctured)");
}

int run_count(const CountArgs& a, std::ostream& out) {
  if (a.family.empty() == a.variety.empty()) {
    throw std::invalid_argument("count: give exactly one of --family (brute force) or --variety (formula)");
  }
  if (!a.variety.empty()) {
    const VarietyDescriptor d = find_variety(a.variety);
    const Rational v = point_count_Sn(d.resolve(a.q), a.n, a.q);
    out << (d.family ? "point count: " : "formula value: ") << v << '\n';
    if (v.sign() < 0 || !v.is_integer()) out << "note: value is negative or not an integer\n";
    return 0;
  }
  CountOptions opts;
  opts.budget = a.budget.value_or(default_budget());
  opts.threads = a.threads;
  out << count_points(make_family(a), a.n, a.q, opts) << '\n';
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  if (a.q) opts.fields = {*a.q};
  bool ok = true;
  for (const auto& r : run_verify_suite(a.suite, opts)) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and point counts of commuting-matrix varieties"};
  app.require_subcommand(1);

  PoincareArgs pa;
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of C_n, S_n, Coh_n, flag or BGL_n");
  poincare_cmd->add_option("--space", pa.space, "cn, sn, coh, flag or bgln")->capture_default_str();
  poincare_cmd->add_option("--variety", pa.variety, "built-in name or descriptor file")->capture_default_str();
  poincare_cmd->add_option("-n", pa.n, "matrix size")->required()->check(CLI::NonNegativeNumber);
  poincare_cmd->add_flag("--abs", pa.abs, "print absolute values of coefficients (display only)");

  CharArgs ca;
  auto* char_cmd = app.add_subcommand("char", "Graded S_n characters in Schur and power-sum form");
  char_cmd->add_option("--flag", ca.flag, "character of the flag variety B_n")->check(CLI::PositiveNumber);
  char_cmd->add_option("--variety", ca.variety, "enhanced character of H^*(X^n)");
  char_cmd->add_option("-n", ca.n, "tensor power")->check(CLI::NonNegativeNumber);
  char_cmd->add_option("-q", ca.q, "resolve q^k eigenvalues at this field size");

  SeriesArgs sa;
  auto* series_cmd = app.add_subcommand("series", "Generating series and product formulas");
  series_cmd->add_option("--kind", sa.kind, "coh, betti, groupoid or stable")->capture_default_str();
  series_cmd->add_option("--variety", sa.variety, "built-in name or descriptor file")->capture_default_str();
  series_cmd->add_option("--t-order", sa.t_order, "t truncation order")->capture_default_str()->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--u-order", sa.u_order, "u truncation order")->capture_default_str()->check(CLI::NonNegativeNumber);
  series_cmd->add_option("-q", sa.q, "field size")->capture_default_str();

  CountArgs ka;
  auto* count_cmd = app.add_subcommand("count", "Count F_q points of C_n(X)");
  count_cmd->add_option("--family", ka.family, "affine, torus or punctured (brute force)");
  count_cmd->add_option("--variety", ka.variety, "evaluate the S_n(X) point-count formula instead");
  count_cmd->add_option("--dim", ka.dim, "N for affine/torus families")->capture_default_str()->check(CLI::PositiveNumber);
  count_cmd->add_option("--n", ka.n, "matrix size")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--q,-q", ka.q, "prime field size")->required();
  count_cmd->add_option("--avoid", ka.avoid, "avoided values for punctured")->capture_default_str();
  count_cmd->add_option("--budget", ka.budget, "maximum number of candidate tuples (default $COMMAT_BUDGET or 2^28)");
  count_cmd->add_option("--threads", ka.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check suite; nonzero exit on any failure");
  verify_cmd->add_option("--suite", va.suite, "suite name or all")->capture_default_str();
  verify_cmd->add_option("-q", va.q, "restrict point-count checks to this field size");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poincare_cmd) return run_poincare(pa, out, err);
    if (*char_cmd) return run_char(ca, out);
    if (*series_cmd) return run_series(sa, out, err);
    if (*count_cmd) return run_count(ka, out);
    if (*verify_cmd) return run_verify(va, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace commat::cli
