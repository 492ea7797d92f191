#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace commat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Field sizes used by the point-count suite.
  std::vector<int> fields{2, 3};
  std::uint32_t seed = 20240611;
};

/// flag, degenerate, gln, coh, macdonald, pointcounts, routes, characters,
/// stable, all.
std::vector<std::string> verify_suite_names();

/// Runs the named suite; throws std::invalid_argument for an unknown name.
std::vector<CriterionResult> run_verify_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace commat
