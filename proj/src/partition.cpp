#include "partlaw/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace partlaw {

double log_big(const BigInt& x) {
  if (x < 0) throw DomainError("log_big: negative argument");
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must be nonincreasing");
    n_ += parts_[i];
  }
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

namespace detail {

Partition conjugate_of_parts(std::span<const int> parts) {
  if (parts.empty()) return Partition{};
  std::vector<int> cols(static_cast<std::size_t>(parts.front()), 0);
  for (int k : parts)
    for (int j = 0; j < k; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

}  // namespace detail

Partition conjugate(const Partition& kappa) { return detail::conjugate_of_parts(kappa.parts()); }

std::int64_t weight_a(const Partition& kappa) {
  std::int64_t a = 0;
  const auto parts = kappa.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) a += static_cast<std::int64_t>(i) * parts[i];
  return a;
}

std::int64_t weight_a_by_columns(const Partition& kappa) {
  std::int64_t a = 0;
  const Partition columns = conjugate(kappa);
  for (int c : columns.parts()) a += static_cast<std::int64_t>(c) * (c - 1) / 2;
  return a;
}

std::int64_t weighted_index_sum(const Partition& kappa) { return weight_a(kappa) + kappa.n(); }

std::int64_t sum_of_squares(const Partition& kappa) {
  std::int64_t s = 0;
  for (int k : kappa.parts()) s += static_cast<std::int64_t>(k) * k;
  return s;
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt dimension(const Partition& kappa) {
  const Partition cols = conjugate(kappa);
  BigInt hooks = 1;
  for (int i = 1; i <= kappa.length(); ++i)
    for (int j = 1; j <= kappa.part(i); ++j) hooks *= (kappa.part(i) - j) + (cols.part(j) - i) + 1;
  const BigInt total = factorial(kappa.n());
  if (total % hooks != 0) throw ConsistencyError("dimension: hook product does not divide n!");
  return total / hooks;
}

CountTable::CountTable(int max_n, int max_m)
    : max_n_(max_n), max_m_(max_m), cols_(std::min(max_m, max_n) + 1) {
  if (max_n < 0 || max_m < 0) throw DomainError("CountTable: negative bounds");
  counts_.resize(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(cols_));
  auto cell = [this](int n, int m) -> BigInt& {
    return counts_[static_cast<std::size_t>(n) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(m)];
  };
  // |P_n(m)| = |P_n(m-1)| + |P_{n-m}(m)|: either fewer than m parts, or
  // exactly m parts and we remove the first column.
  for (int n = 0; n <= max_n; ++n) {
    cell(n, 0) = (n == 0) ? 1 : 0;
    for (int m = 1; m < cols_; ++m) {
      cell(n, m) = cell(n, m - 1);
      if (n >= m) cell(n, m) += cell(n - m, m);
    }
  }
}

const BigInt& CountTable::at_most(int n, int m) const {
  if (n < 0 || m < 0) throw RangeError("CountTable: negative index");
  m = std::min(m, n);
  if (n > max_n_ || m > max_m_)
    throw RangeError("CountTable: (" + std::to_string(n) + ", " + std::to_string(m) + ") outside table (" +
                     std::to_string(max_n_) + ", " + std::to_string(max_m_) + ")");
  return counts_[static_cast<std::size_t>(n) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(m)];
}

BigInt CountTable::exactly(int n, int m) const {
  if (n < 0 || m < 0) throw RangeError("CountTable: negative index");
  if (m > n) return 0;
  if (m == 0) return n == 0 ? 1 : 0;
  return at_most(n - m, m);
}

BigInt count_bounded(int n, int m, const CountTable& table) { return table.at_most(n, m); }
BigInt count_exact(int n, int m, const CountTable& table) { return table.exactly(n, m); }

std::vector<BigInt> partition_counts(int max_n) {
  if (max_n < 0) throw DomainError("partition_counts: negative bound");
  std::vector<BigInt> p(static_cast<std::size_t>(max_n + 1));
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

BigInt partition_count(int n) { return partition_counts(n).back(); }

std::vector<Partition> enumerate(int n, int length_min, int length_max) {
  std::vector<Partition> out;
  for_each_partition(n, length_min, length_max, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// Canonical order walks the conjugate mu (parts <= m) in ascending
// lexicographic order; the number of completions after fixing a next part p
// with r cells left is |P_{r-p}(p)|.
Partition unrank(int n, int m, const BigInt& index, const CountTable& table) {
  if (n < 0 || m < 0) throw DomainError("unrank: negative arguments");
  const BigInt& total = table.at_most(n, m);
  if (index < 0 || index >= total)
    throw RangeError("unrank: index out of range for P_" + std::to_string(n) + "(" + std::to_string(m) + ")");
  std::vector<int> mu;
  BigInt rest = index;
  int remaining = n;
  int bound = std::min(m, n);
  while (remaining > 0) {
    const int top = std::min(bound, remaining);
    int chosen = 0;
    for (int p = 1; p <= top; ++p) {
      const BigInt& block = table.at_most(remaining - p, p);
      if (rest < block) {
        chosen = p;
        break;
      }
      rest -= block;
    }
    if (chosen == 0) throw ConsistencyError("unrank: count table descent fell through");
    mu.push_back(chosen);
    remaining -= chosen;
    bound = chosen;
  }
  return detail::conjugate_of_parts(mu);
}

BigInt rank(const Partition& kappa, int m, const CountTable& table) {
  if (kappa.length() > m) throw DomainError("rank: partition longer than m");
  const Partition mu = conjugate(kappa);
  BigInt idx = 0;
  int remaining = kappa.n();
  for (int p : mu.parts()) {
    for (int q = 1; q < p; ++q) idx += table.at_most(remaining - q, q);
    remaining -= p;
  }
  return idx;
}

}  // namespace partlaw
