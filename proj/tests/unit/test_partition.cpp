#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "commat/partition.hpp"

using namespace commat;

namespace {

// Euler's pentagonal-number recurrence for p(n).
Integer pentagonal_count(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      Integer term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

// Every weakly decreasing sequence summing to n, by exhaustive search over
// sequences of length <= n with entries in 1..n.
std::set<std::vector<int>> brute_force_partitions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> seq;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (std::is_sorted(seq.rbegin(), seq.rend())) out.insert(seq);
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      seq.push_back(v);
      rec(remaining - v);
      seq.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace

TEST_CASE("partitions_of examples") {
  const auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].length() == 0);

  const auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));

  CHECK(partitions_of(5).size() == brute_force_partitions(5).size());
  CHECK(partitions_of(5).size() == 7);
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("enumeration is exhaustive, duplicate-free and reverse-lexicographic") {
  for (int n = 0; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    std::set<std::vector<int>> seen;
    for (const auto& p : parts) {
      CHECK(p.size() == n);
      seen.insert(p.parts());
    }
    CHECK(seen == brute_force_partitions(n));
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i] < parts[i - 1]);
  }
}

TEST_CASE("partition counts match the pentagonal recurrence up to 30") {
  for (int n = 0; n <= 30; ++n) CHECK(Integer(static_cast<long>(partitions_of(n).size())) == pentagonal_count(n));
}

TEST_CASE("z_lambda examples") {
  CHECK(Partition({1, 1, 1}).z() == 6);
  CHECK(Partition({2, 1}).z() == 2);
  CHECK(Partition({3}).z() == 3);
  CHECK(Partition({2, 2, 1}).z() == 8);
  CHECK(Partition().z() == 1);
}

TEST_CASE("class sizes n!/z_lambda sum to n!") {
  for (int n = 0; n <= 12; ++n) {
    Integer total = 0;
    const Integer nfact = factorial(static_cast<unsigned>(n));
    for (const auto& p : partitions_of(n)) {
      CHECK(nfact % p.z() == 0);
      total += nfact / p.z();
    }
    CHECK(total == nfact);
  }
}

TEST_CASE("hook lengths and n_stat examples") {
  auto sorted_hooks = [](const Partition& p) {
    auto h = p.hook_lengths();
    std::sort(h.begin(), h.end());
    return h;
  };
  CHECK(sorted_hooks(Partition({2, 1})) == std::vector<int>{1, 1, 3});
  CHECK(Partition({2, 1}).n_stat() == 1);
  CHECK(sorted_hooks(Partition({4})) == std::vector<int>{1, 2, 3, 4});
  CHECK(Partition({4}).n_stat() == 0);
  CHECK(sorted_hooks(Partition({1, 1, 1})) == std::vector<int>{1, 2, 3});
  CHECK(Partition({1, 1, 1}).n_stat() == 3);
}

TEST_CASE("hook formula gives positive integers") {
  for (int n = 1; n <= 10; ++n) {
    Integer sum_sq = 0;
    for (const auto& p : partitions_of(n)) {
      Integer prod = 1;
      for (int h : p.hook_lengths()) prod *= h;
      const Integer nfact = factorial(static_cast<unsigned>(n));
      CHECK(nfact % prod == 0);
      const Integer f = nfact / prod;
      CHECK(f > 0);
      sum_sq += f * f;
    }
    CHECK(sum_sq == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("text forms") {
  const Partition p({1, 3, 2});
  CHECK(p.to_string() == "(3,2,1)");
  CHECK(p.to_exponential_string() == "1^1 2^1 3^1");
  CHECK(Partition::parse("(3,2,1)") == p);
  CHECK(Partition::parse("1^1 2^1 3^1") == p);
  CHECK(Partition::parse("1^3") == Partition({1, 1, 1}));
  CHECK(Partition::parse("()") == Partition());
  CHECK_THROWS_AS(Partition::parse("(3,a)"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2^"), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(p.multiplicity(2) == 1);
  CHECK(p.multiplicity(7) == 0);
}
