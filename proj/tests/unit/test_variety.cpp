#include <doctest.h>

#include <string>

#include "commat/variety.hpp"

using namespace commat;

namespace {

std::string data(const std::string& file) { return std::string(COMMAT_TEST_DATA_DIR) + "/" + file; }

std::string descriptor_error(std::string_view text) {
  try {
    parse_descriptor(text, "input.json");
  } catch (const DescriptorError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("EigenSpec parsing and resolution") {
  CHECK(EigenSpec::parse("1/2").resolve(7) == Rational(1, 2));
  CHECK(EigenSpec::parse("-3").resolve(7) == Rational(-3));
  CHECK(EigenSpec::parse("q").resolve(3) == Rational(3));
  CHECK(EigenSpec::parse("q^-1").resolve(3) == Rational(1, 3));
  CHECK(EigenSpec::parse(" q^2 ").resolve(2) == Rational(4));
  CHECK(EigenSpec::parse("q^-1").to_string() == "q^-1");
  CHECK(EigenSpec::parse("q").to_string() == "q");
  CHECK(EigenSpec::parse("2/4").to_string() == "1/2");
  CHECK_THROWS_AS(EigenSpec::parse("q^"), std::invalid_argument);
  CHECK_THROWS_AS(EigenSpec::parse("q^x"), std::invalid_argument);
  CHECK_THROWS_AS(EigenSpec::parse("qq"), std::invalid_argument);
  CHECK_THROWS(EigenSpec::parse("1/0"));
}

TEST_CASE("builtin varieties") {
  CHECK(builtin_variety_names() == std::vector<std::string>{"point", "affine", "torus", "punctured", "p1"});

  const auto torus = builtin_variety("torus");
  CHECK(torus.resolve(2) == GradedSpace({Stratum{0, 1, 1}, Stratum{1, 1, Rational(1, 2)}}));
  CHECK(torus.betti_space() == GradedSpace::from_betti({1, 1}));
  REQUIRE(torus.family.has_value());
  CHECK(describe(*torus.family) == "Torus{1}");

  const auto punctured = builtin_variety("punctured");
  CHECK(punctured.resolve(3) == GradedSpace({Stratum{0, 1, 1}, Stratum{1, 2, Rational(1, 3)}}));
  CHECK(describe(*punctured.family) == "PuncturedLine{0,1}");

  CHECK(builtin_variety("point").resolve(5) == GradedSpace({Stratum{0, 1, Rational(1, 5)}}));
  CHECK(builtin_variety("affine").resolve(5) == GradedSpace({Stratum{0, 1, 1}}));
  CHECK(builtin_variety("p1").betti_space() == GradedSpace::from_betti({1, 0, 1}));
  CHECK_FALSE(builtin_variety("p1").family.has_value());
  CHECK_THROWS_AS(builtin_variety("k3"), std::invalid_argument);
}

TEST_CASE("descriptor parsing") {
  const auto d = parse_descriptor(R"({"name": "x", "strata": [{"deg": 0}, {"deg": 1, "dim": 2, "eigenvalue": "1/3"}]})");
  CHECK(d.name == "x");
  REQUIRE(d.strata.size() == 2);
  CHECK(d.strata[0].dim == 1);
  CHECK(d.strata[0].eigenvalue.resolve(2) == Rational(1));
  CHECK(d.resolve(2) == GradedSpace({Stratum{0, 1, 1}, Stratum{1, 2, Rational(1, 3)}}));

  const auto integer_eigen = parse_descriptor(R"({"strata": [{"deg": 0, "eigenvalue": 2}]})");
  CHECK(integer_eigen.strata[0].eigenvalue.resolve(3) == Rational(2));
}

TEST_CASE("descriptor errors name the field") {
  CHECK(descriptor_error(R"({"strata": [{"dim": 1}]})") == "input.json: strata[0].deg: missing required field");
  CHECK(descriptor_error(R"({"strata": [{"deg": 0}, {"deg": -1}]})").starts_with("input.json: strata[1].deg: value -1"));
  CHECK(descriptor_error(R"({"strata": [{"deg": 0, "dim": 0}]})").starts_with("input.json: strata[0].dim:"));
  CHECK(descriptor_error(R"({"strata": [{"deg": "0"}]})") == "input.json: strata[0].deg: expected an integer");
  CHECK(descriptor_error(R"({"strata": [{"deg": 0, "eigenvalue": "q^z"}]})")
            .starts_with("input.json: strata[0].eigenvalue: malformed eigenvalue"));
  CHECK(descriptor_error(R"({"strata": [{"deg": 0, "eigenvalue": 0.5}]})").starts_with("input.json: strata[0].eigenvalue:"));
  CHECK(descriptor_error(R"({"name": "x"})") == "input.json: strata: missing required field");
  CHECK(descriptor_error(R"({"strata": {}})") == "input.json: strata: expected an array");
  CHECK(descriptor_error(R"([1, 2])") == "input.json: top-level value must be an object");
  CHECK(descriptor_error(R"({"name": 3, "strata": []})") == "input.json: name: expected a string");
}

TEST_CASE("syntax errors report line and column") {
  CHECK(descriptor_error("{\n  \"strata\": [\n    {\"deg\": 0,}\n  ]\n}").starts_with("input.json:3:"));
  const std::string path = data("malformed.json");
  try {
    load_descriptor(path);
    FAIL("expected DescriptorError");
  } catch (const DescriptorError& e) {
    CHECK(std::string(e.what()).starts_with(path + ":5:"));
    CHECK(std::string(e.what()).ends_with("invalid JSON"));
  }
}

TEST_CASE("descriptor files") {
  const auto circle = load_descriptor(data("circle.json"));
  CHECK(circle.name == "circle");
  CHECK(circle.betti_space() == GradedSpace::from_betti({1, 1}));

  const auto torus = find_variety(data("torus_q.json"));
  CHECK(torus.resolve(3) == builtin_variety("torus").resolve(3));
  CHECK_FALSE(torus.family.has_value());

  CHECK_THROWS_AS(load_descriptor(data("bad_dim.json")), DescriptorError);
  CHECK_THROWS_AS(find_variety(data("missing.json")), DescriptorError);
  CHECK(find_variety("affine").name == "affine");
}
