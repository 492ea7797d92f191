#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = commat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(COMMAT_TEST_DATA_DIR) + "/" + file; }

}  // namespace

TEST_CASE("poincare golden output") {
  const auto r = run({"poincare", "--space", "cn", "--variety", "torus", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 - u - u^3 + u^4\n");
  CHECK(r.err.empty());

  CHECK(run({"poincare", "--space", "flag", "-n", "3"}).out == "1 + 2*u^2 + 2*u^4 + u^6\n");
  CHECK(run({"poincare", "--space", "cn", "--variety", "affine", "-n", "4"}).out == "1\n");
  CHECK(run({"poincare", "--space", "bgln", "-n", "1"}).out == "(-1)/(-1 + u^2)\n");
}

TEST_CASE("poincare --abs warns and drops signs") {
  const auto r = run({"poincare", "--space", "cn", "--variety", "torus", "-n", "2", "--abs"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + u + u^3 + u^4\n");
  CHECK(r.err.starts_with("warning:"));
}

TEST_CASE("char golden output") {
  const auto flag = run({"char", "--flag", "2"});
  CHECK(flag.code == 0);
  CHECK(flag.out == "schur: s[2] + u^2*s[1,1]\np: (1/2 + (1/2)*u^2)*p[1,1] + (1/2 - (1/2)*u^2)*p[2]\n");

  const auto torus = run({"char", "--variety", "torus", "-n", "2"});
  CHECK(torus.code == 0);
  CHECK(torus.out.starts_with("schur: (1 - u)*s[2] + (-u + u^2)*s[1,1]\n"));
}

TEST_CASE("series reports") {
  const auto coh = run({"series", "--kind", "coh", "--variety", "torus", "--t-order", "4", "--u-order", "12"});
  CHECK(coh.code == 0);
  CHECK(coh.out.ends_with("verdict: equal (t-order 4, u-order 12)\n"));

  const auto groupoid = run({"series", "--kind", "groupoid", "--variety", "punctured", "-q", "3", "--t-order", "2"});
  CHECK(groupoid.code == 0);
  CHECK(groupoid.out.find("partial product with 32 factors") != std::string::npos);
  CHECK(groupoid.out.ends_with("verdict: equal (t-order 2)\n"));
  CHECK(groupoid.err.empty());

  const auto non_curve = run({"series", "--kind", "groupoid", "--variety", "p1", "-q", "2", "--t-order", "1"});
  CHECK(non_curve.err.starts_with("warning:"));

  const auto stable = run({"series", "--kind", "stable", "--variety", "p1", "--u-order", "6"});
  CHECK(stable.code == 0);
  CHECK(stable.out.starts_with("stable: 1 + u^2 + 2*u^4 + 3*u^6\n"));
  CHECK(stable.out.ends_with("verdict: equal (u-order 6)\n"));

  const auto betti = run({"series", "--kind", "betti", "--variety", "p1", "--t-order", "2"});
  CHECK(betti.code == 0);
  CHECK(betti.out == "t^0: 1\nt^1: 1 + u^2\nt^2: 1 + u^2 + u^4\n");
}

TEST_CASE("count subcommand") {
  CHECK(run({"count", "--family", "torus", "--n", "3", "--q", "2"}).out == "168\n");
  CHECK(run({"count", "--family", "affine", "--dim", "2", "--n", "2", "--q", "2", "--threads", "4"}).out == "88\n");
  CHECK(run({"count", "--family", "punctured", "--n", "1", "--q", "3"}).out == "1\n");
  CHECK(run({"count", "--variety", "torus", "--n", "2", "-q", "2"}).out == "point count: 6\n");
  CHECK(run({"count", "--variety", "p1", "--n", "1", "-q", "2"}).out == "formula value: 3\n");

  const auto over = run({"count", "--family", "affine", "--n", "3", "--q", "2", "--budget", "10"});
  CHECK(over.code == 2);
  CHECK(over.err.find("512") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--suite", "pointcounts", "-q", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("[PASS] 6 "));
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("descriptor files") {
  const auto circle = run({"poincare", "--space", "cn", "--variety", data("circle.json"), "-n", "2"});
  CHECK(circle.code == 0);
  CHECK(circle.out == "1 - u - u^3 + u^4\n");

  const auto bad = run({"poincare", "--space", "cn", "--variety", data("malformed.json"), "-n", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed.json:5:") != std::string::npos);

  const auto dim = run({"poincare", "--space", "cn", "--variety", data("bad_dim.json"), "-n", "2"});
  CHECK(dim.code == 2);
  CHECK(dim.err.find("strata[1].dim") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"poincare", "--space", "cn"}).code == 2);
  CHECK(run({"poincare", "--space", "grassmannian", "-n", "2"}).code == 2);
  CHECK(run({"count", "--n", "2", "--q", "2"}).code == 2);
  CHECK(run({"count", "--family", "affine", "--n", "2", "--q", "4"}).code == 2);
}

TEST_CASE("output is identical across runs") {
  const std::vector<std::vector<std::string>> invocations{
      {"char", "--variety", "punctured", "-n", "3", "-q", "3"},
      {"series", "--kind", "groupoid", "--variety", "torus", "-q", "2", "--t-order", "3"},
      {"count", "--family", "punctured", "--n", "2", "--q", "3", "--threads", "3"},
  };
  for (const auto& args : invocations) {
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
