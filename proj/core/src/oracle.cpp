#include "commat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace commat {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

Integer gl_order(int n, int q) {
  if (n < 1) throw std::invalid_argument("gl_order: n must be positive");
  if (q < 2) throw std::invalid_argument("gl_order: q must be at least 2");
  const Integer qn = ipow(Integer(q), static_cast<unsigned>(n));
  Integer r = 1;
  for (int i = 0; i < n; ++i) r *= qn - ipow(Integer(q), static_cast<unsigned>(i));
  return r;
}

FqMatrix::FqMatrix(int n, int p) : n_(n), p_(p), e_(static_cast<std::size_t>(n * n), 0) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  if (p < 2 || p > 255) throw std::invalid_argument("field size out of range");
}

FqMatrix FqMatrix::from_index(int n, int p, std::uint64_t index) {
  FqMatrix m(n, p);
  for (int k = n * n - 1; k >= 0; --k) {
    m.e_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  return m;
}

FqMatrix FqMatrix::scalar(int n, int p, int value) {
  FqMatrix m(n, p);
  const int v = ((value % p) + p) % p;
  for (int i = 0; i < n; ++i) m.e_[static_cast<std::size_t>(i * n + i)] = static_cast<std::uint8_t>(v);
  return m;
}

void FqMatrix::set(int r, int c, int v) {
  e_[static_cast<std::size_t>(r * n_ + c)] = static_cast<std::uint8_t>(((v % p_) + p_) % p_);
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  FqMatrix r(n_, p_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      int acc = 0;
      for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
      r.e_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint8_t>(acc % p_);
    }
  }
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  FqMatrix r(n_, p_);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    r.e_[k] = static_cast<std::uint8_t>((e_[k] + p_ - o.e_[k]) % p_);
  }
  return r;
}

bool FqMatrix::commutes_with(const FqMatrix& o) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      int ab = 0, ba = 0;
      for (int k = 0; k < n_; ++k) {
        ab += at(i, k) * o.at(k, j);
        ba += o.at(i, k) * at(k, j);
      }
      if ((ab - ba) % p_ != 0) return false;
    }
  }
  return true;
}

bool FqMatrix::is_invertible() const {
  std::vector<int> a(e_.begin(), e_.end());
  auto cell = [&](int r, int c) -> int& { return a[static_cast<std::size_t>(r * n_ + c)]; };
  auto inv_mod = [&](int x) {
    int result = 1, base = x, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  };
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (cell(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) std::swap(cell(pivot, c), cell(col, c));
    }
    const int inv = inv_mod(cell(col, col));
    for (int r = col + 1; r < n_; ++r) {
      const int f = cell(r, col) * inv % p_;
      if (f == 0) continue;
      for (int c = col; c < n_; ++c) cell(r, c) = ((cell(r, c) - f * cell(col, c)) % p_ + p_) % p_;
    }
  }
  return true;
}

std::string describe(const VarietyFamily& family) {
  struct Visitor {
    std::string operator()(const AffineSpace& a) const { return "AffineSpace{" + std::to_string(a.dim) + "}"; }
    std::string operator()(const Torus& t) const { return "Torus{" + std::to_string(t.dim) + "}"; }
    std::string operator()(const PuncturedLine& l) const {
      std::ostringstream os;
      os << "PuncturedLine{";
      for (std::size_t i = 0; i < l.avoided.size(); ++i) os << (i ? "," : "") << l.avoided[i];
      os << '}';
      return os.str();
    }
  };
  return std::visit(Visitor{}, family);
}

bool is_curve_family(const VarietyFamily& family) {
  if (const auto* a = std::get_if<AffineSpace>(&family)) return a->dim == 1;
  if (const auto* t = std::get_if<Torus>(&family)) return t->dim == 1;
  return true;
}

BudgetExceeded::BudgetExceeded(const Integer& required, std::uint64_t budget)
    : std::runtime_error("search space of " + required.get_str() + " candidates exceeds the budget of " +
                         std::to_string(budget) + "; raise --budget to at least " + required.get_str()),
      required_(required) {}

namespace {

int tuple_size(const VarietyFamily& family) {
  if (const auto* a = std::get_if<AffineSpace>(&family)) return a->dim;
  if (const auto* t = std::get_if<Torus>(&family)) return t->dim;
  return 1;
}

void validate(const VarietyFamily& family, int n, int p) {
  if (n < 1) throw std::invalid_argument("count_points: n must be positive");
  if (!is_prime(p)) throw std::invalid_argument("count_points: only prime fields are supported, got q=" + std::to_string(p));
  if (tuple_size(family) < 1) throw std::invalid_argument("count_points: family dimension must be positive");
  if (const auto* l = std::get_if<PuncturedLine>(&family)) {
    std::set<int> seen;
    for (int a : l->avoided) {
      if (!seen.insert(((a % p) + p) % p).second) {
        throw std::invalid_argument("count_points: avoided values must be distinct mod p");
      }
    }
  }
}

bool admissible(const VarietyFamily& family, const FqMatrix& m) {
  if (std::holds_alternative<AffineSpace>(family)) return true;
  if (std::holds_alternative<Torus>(family)) return m.is_invertible();
  for (int a : std::get<PuncturedLine>(family).avoided) {
    if (!(m - FqMatrix::scalar(m.n(), m.p(), a)).is_invertible()) return false;
  }
  return true;
}

// Counts extensions of a partial tuple; `chosen` already pairwise commutes.
std::uint64_t extend(const std::vector<FqMatrix>& pool, std::vector<const FqMatrix*>& chosen, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (const auto& m : pool) {
    bool ok = true;
    for (const FqMatrix* c : chosen) {
      if (!c->commutes_with(m)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(&m);
    total += extend(pool, chosen, remaining - 1);
    chosen.pop_back();
  }
  return total;
}

}  // namespace

Integer search_space(const VarietyFamily& family, int n, int p) {
  return ipow(Integer(p), static_cast<unsigned>(tuple_size(family) * n * n));
}

Integer count_points(const VarietyFamily& family, int n, int p, const CountOptions& options) {
  validate(family, n, p);
  const Integer required = search_space(family, n, p);
  if (required > Integer(std::to_string(options.budget))) throw BudgetExceeded(required, options.budget);

  const int tuple = tuple_size(family);
  const std::uint64_t per_matrix = ipow(Integer(p), static_cast<unsigned>(n * n)).get_ui();
  const std::uint64_t rows = ipow(Integer(p), static_cast<unsigned>(n)).get_ui();

  std::vector<FqMatrix> pool;
  for (std::uint64_t i = 0; i < per_matrix; ++i) {
    FqMatrix m = FqMatrix::from_index(n, p, i);
    if (admissible(family, m)) pool.push_back(std::move(m));
  }
  // Pool is in row-major lexicographic order; bucket it by first row.
  std::vector<std::size_t> row_begin(rows + 1, pool.size());
  {
    std::size_t k = 0;
    for (std::uint64_t r = 0; r < rows; ++r) {
      while (k < pool.size()) {
        std::uint64_t first_row = 0;
        for (int c = 0; c < n; ++c) first_row = first_row * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(pool[k].at(0, c));
        if (first_row >= r) break;
        ++k;
      }
      row_begin[r] = k;
    }
  }

  auto count_rows = [&](std::uint64_t r) {
    std::uint64_t total = 0;
    for (std::size_t k = row_begin[r]; k < row_begin[r + 1]; ++k) {
      std::vector<const FqMatrix*> chosen{&pool[k]};
      total += extend(pool, chosen, tuple - 1);
    }
    return total;
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(rows)));
  if (workers == 1) {
    std::uint64_t total = 0;
    for (std::uint64_t r = 0; r < rows; ++r) total += count_rows(r);
    return Integer(std::to_string(total));
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::uint64_t r = next++; r < rows; r = next++) partial[w] += count_rows(r);
    });
  }
  for (auto& t : threads) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return Integer(std::to_string(total));
}

}  // namespace commat
