#include "commat/variety.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace commat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

EigenSpec EigenSpec::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (!s.empty() && s.front() == 'q') {
    if (s.size() == 1) return q_power(1);
    if (s[1] != '^' || s.size() == 2) throw std::invalid_argument("malformed eigenvalue: '" + std::string(text) + "'");
    const std::string exp(s.substr(2));
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(exp, &used);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed eigenvalue: '" + std::string(text) + "'");
    }
    if (used != exp.size()) throw std::invalid_argument("malformed eigenvalue: '" + std::string(text) + "'");
    return q_power(e);
  }
  return EigenSpec(Rational::parse(s));
}

Rational EigenSpec::resolve(int q) const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  return Rational(q).pow(std::get<QPower>(value_).exponent);
}

std::string EigenSpec::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
  const int e = std::get<QPower>(value_).exponent;
  return e == 1 ? "q" : "q^" + std::to_string(e);
}

GradedSpace VarietyDescriptor::resolve(int q) const {
  std::vector<Stratum> out;
  for (const auto& s : strata) out.push_back(Stratum{s.degree, s.dim, s.eigenvalue.resolve(q)});
  return GradedSpace(std::move(out));
}

GradedSpace VarietyDescriptor::betti_space() const {
  std::vector<Stratum> out;
  for (const auto& s : strata) out.push_back(Stratum{s.degree, s.dim, Rational(1)});
  return GradedSpace(std::move(out));
}

VarietyDescriptor builtin_variety(std::string_view name) {
  const EigenSpec one(Rational(1));
  const EigenSpec inv_q = EigenSpec::q_power(-1);
  if (name == "point") return {"point", {{0, 1, inv_q}}, std::nullopt};
  if (name == "affine") return {"affine", {{0, 1, one}}, AffineSpace{1}};
  if (name == "torus") return {"torus", {{0, 1, one}, {1, 1, inv_q}}, Torus{1}};
  if (name == "punctured") return {"punctured", {{0, 1, one}, {1, 2, inv_q}}, PuncturedLine{{0, 1}}};
  if (name == "p1") return {"p1", {{0, 1, one}, {2, 1, inv_q}}, std::nullopt};
  throw std::invalid_argument("unknown built-in variety '" + std::string(name) + "'");
}

std::vector<std::string> builtin_variety_names() { return {"point", "affine", "torus", "punctured", "p1"}; }

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int integer_field(const nlohmann::json& obj, const char* key, const std::string& where, int fallback, bool required,
                  int minimum) {
  if (!obj.contains(key)) {
    if (required) throw DescriptorError(where + "." + key + ": missing required field");
    return fallback;
  }
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw DescriptorError(where + "." + key + ": expected an integer");
  const auto value = v.get<long long>();
  if (value < minimum || value > 1'000'000) {
    throw DescriptorError(where + "." + key + ": value " + std::to_string(value) + " out of range (minimum " +
                          std::to_string(minimum) + ")");
  }
  return static_cast<int>(value);
}

}  // namespace

VarietyDescriptor parse_descriptor(std::string_view json_text, std::string_view source) {
  const std::string src(source);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(json_text, e.byte == 0 ? 0 : e.byte - 1);
    throw DescriptorError(src + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
  if (!doc.is_object()) throw DescriptorError(src + ": top-level value must be an object");

  VarietyDescriptor d;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw DescriptorError(src + ": name: expected a string");
    d.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("strata")) throw DescriptorError(src + ": strata: missing required field");
  const auto& strata = doc["strata"];
  if (!strata.is_array()) throw DescriptorError(src + ": strata: expected an array");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string where = src + ": strata[" + std::to_string(i) + "]";
    const auto& s = strata[i];
    if (!s.is_object()) throw DescriptorError(where + ": expected an object");
    StratumSpec spec;
    spec.degree = integer_field(s, "deg", where, 0, true, 0);
    spec.dim = integer_field(s, "dim", where, 1, false, 1);
    if (s.contains("eigenvalue")) {
      const auto& ev = s["eigenvalue"];
      try {
        if (ev.is_string()) {
          spec.eigenvalue = EigenSpec::parse(ev.get<std::string>());
        } else if (ev.is_number_integer()) {
          spec.eigenvalue = EigenSpec(Rational(ev.get<long>()));
        } else {
          throw std::invalid_argument("expected a string such as \"1/2\" or \"q^-1\"");
        }
      } catch (const std::exception& e) {
        throw DescriptorError(where + ".eigenvalue: " + e.what());
      }
    }
    d.strata.push_back(spec);
  }
  return d;
}

VarietyDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError(path.string() + ": cannot open descriptor file");
  std::ostringstream buf;
  buf << in.rdbuf();
  VarietyDescriptor d = parse_descriptor(buf.str(), path.string());
  if (d.name.empty()) d.name = path.stem().string();
  return d;
}

VarietyDescriptor find_variety(std::string_view name_or_path) {
  const auto names = builtin_variety_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_variety(name_or_path);
  return load_descriptor(std::filesystem::path(std::string(name_or_path)));
}

}  // namespace commat
