#include "commat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace commat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = 0;
  for (int p : parts_) size_ += p;
  mult_.assign(static_cast<std::size_t>(largest()) + 1, 0);
  for (int p : parts_) ++mult_[static_cast<std::size_t>(p)];
}

Partition Partition::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed partition: '" + std::string(text) + "'"); };
  if (s.find('^') != std::string::npos) {
    std::istringstream in(s);
    std::string tok;
    std::vector<int> parts;
    while (in >> tok) {
      const auto caret = tok.find('^');
      if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size()) throw bad();
      int part = 0, count = 0;
      try {
        std::size_t used = 0;
        part = std::stoi(tok.substr(0, caret), &used);
        if (used != caret) throw bad();
        count = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw bad();
      } catch (const std::logic_error&) {
        throw bad();
      }
      if (part <= 0 || count < 0) throw bad();
      parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    }
    return Partition(std::move(parts));
  }
  std::string body;
  for (char c : s) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    body.push_back(c);
  }
  std::vector<int> parts;
  if (body.empty()) return Partition();
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw bad();
    }
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  if (i <= 0 || i >= static_cast<int>(mult_.size())) return 0;
  return mult_[static_cast<std::size_t>(i)];
}

Integer Partition::z() const {
  Integer r = 1;
  for (int i = 1; i < static_cast<int>(mult_.size()); ++i) {
    const int a = mult_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    r *= ipow(Integer(i), static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(a));
  }
  return r;
}

std::vector<int> Partition::hook_lengths() const {
  const Partition conj = conjugate();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < length(); ++i) {
    for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) {
      const int arm = parts_[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj[j] - i - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

int Partition::n_stat() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[static_cast<std::size_t>(i)];
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::string Partition::to_exponential_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i < static_cast<int>(mult_.size()); ++i) {
    const int a = mult_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << i << '^' << a;
  }
  return os.str();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

}  // namespace commat
