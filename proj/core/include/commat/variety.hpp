#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "commat/graded_space.hpp"
#include "commat/oracle.hpp"

namespace commat {

/// A Frobenius eigenvalue as written by the user: either an exact rational or
/// a power q^k of the field size, resolved once q is known.
class EigenSpec {
 public:
  EigenSpec() : value_(Rational(1)) {}
  explicit EigenSpec(Rational r) : value_(std::move(r)) {}
  static EigenSpec q_power(int exponent) { return EigenSpec(QPower{exponent}); }

  /// "1", "-3", "1/2", "q", "q^-1", "q^2".
  static EigenSpec parse(std::string_view text);

  Rational resolve(int q) const;
  std::string to_string() const;

 private:
  struct QPower {
    int exponent;
  };
  explicit EigenSpec(QPower p) : value_(p) {}
  std::variant<Rational, QPower> value_;
};

struct StratumSpec {
  int degree = 0;
  int dim = 1;
  EigenSpec eigenvalue;
};

struct VarietyDescriptor {
  std::string name;
  std::vector<StratumSpec> strata;
  /// Oracle family for the built-in curves, used by cross-checks.
  std::optional<VarietyFamily> family;

  /// Cohomology with eigenvalues resolved at field size q.
  GradedSpace resolve(int q) const;
  /// Betti data only (all eigenvalues 1).
  GradedSpace betti_space() const;
};

/// Malformed descriptor input; the message names the line or field.
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// point, affine (A^1), torus (G_m), punctured (A^1 minus {0,1}), p1 (P^1).
VarietyDescriptor builtin_variety(std::string_view name);
std::vector<std::string> builtin_variety_names();

/// {"name": "...", "strata": [{"deg": 0, "dim": 1, "eigenvalue": "1"}, ...]}.
/// "dim" defaults to 1 and "eigenvalue" to "1".
VarietyDescriptor parse_descriptor(std::string_view json_text, std::string_view source = "<input>");
VarietyDescriptor load_descriptor(const std::filesystem::path& path);

/// A built-in name, otherwise a descriptor file path.
VarietyDescriptor find_variety(std::string_view name_or_path);

}  // namespace commat
