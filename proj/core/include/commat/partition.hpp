#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "commat/rational.hpp"

namespace commat {

/// Integer partition, parts weakly decreasing and positive. The exponential
/// form 1^{a_1} 2^{a_2} ... is computed once on construction.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; they are sorted. Throws on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  /// "(3,2,1)", "3,2,1", "()" or the exponential form "1^1 2^1 3^1".
  static Partition parse(std::string_view text);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  /// a_i: number of parts equal to i.
  int multiplicity(int i) const;
  /// Largest part, 0 for the empty partition.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Centralizer order prod i^{a_i} a_i!.
  Integer z() const;
  /// Hook lengths in row-major cell order.
  std::vector<int> hook_lengths() const;
  /// sum (i-1) lambda_i.
  int n_stat() const;
  Partition conjugate() const;
  /// Multiset union of parts (the p-basis product).
  Partition join(const Partition& other) const;

  std::string to_string() const;
  std::string to_exponential_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on the parts sequence, so (1,1) < (2).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> mult_;  // mult_[i] = a_i, index 0 unused
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

}  // namespace commat
