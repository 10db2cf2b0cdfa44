#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partlaw/types.hpp"

namespace partlaw {

// An integer partition k_1 >= k_2 >= ... >= k_m >= 1. The empty partition
// (n = 0, m = 0) is valid.
class Partition {
 public:
  Partition() = default;

  // Throws DomainError unless parts are nonincreasing and positive.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based access; zero past the last part.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Transpose of the Young diagram: k'_j = #{i : k_i >= j}.
Partition conjugate(const Partition& kappa);

// a(kappa) = sum_i (i - 1) k_i.
std::int64_t weight_a(const Partition& kappa);

// The same weight via columns: sum_j C(k'_j, 2).
std::int64_t weight_a_by_columns(const Partition& kappa);

// sum_i i * k_i and sum_i k_i^2, used by the eigenvalue and profile code.
std::int64_t weighted_index_sum(const Partition& kappa);
std::int64_t sum_of_squares(const Partition& kappa);

BigInt factorial(int n);

// Hook-length formula: n! / prod (arm + leg + 1).
BigInt dimension(const Partition& kappa);

// Table of |P_n(m)|, the number of partitions of n into at most m parts,
// for 0 <= n <= max_n and 0 <= m <= max_m. Immutable once built.
class CountTable {
 public:
  CountTable(int max_n, int max_m);

  int max_n() const { return max_n_; }
  int max_m() const { return max_m_; }

  // |P_n(m)|; m > n is clamped to n. Throws RangeError outside the table.
  const BigInt& at_most(int n, int m) const;

  // |P'_n(m)|, exactly m parts, via kappa -> (k_1 - 1, ..., k_m - 1).
  BigInt exactly(int n, int m) const;

 private:
  int max_n_;
  int max_m_;
  int cols_;
  std::vector<BigInt> counts_;
};

BigInt count_bounded(int n, int m, const CountTable& table);
BigInt count_exact(int n, int m, const CountTable& table);

// p(0..max_n) by Euler's pentagonal recurrence; independent of CountTable.
std::vector<BigInt> partition_counts(int max_n);
BigInt partition_count(int n);

// Visits every partition of n with length in [length_min, length_max] once,
// in canonical order: ascending lexicographic order of the conjugates. For
// n <= 5 this coincides with reverse-lexicographic order of the parts.
// unrank() and rank() use the same order.
template <class Visitor>
void for_each_partition(int n, int length_min, int length_max, Visitor&& visit);

std::vector<Partition> enumerate(int n, int length_min, int length_max);
inline std::vector<Partition> enumerate(int n) { return enumerate(n, 0, n); }

// The index-th element of P_n(m) in canonical order.
Partition unrank(int n, int m, const BigInt& index, const CountTable& table);

// Position of kappa within P_n(m), m >= kappa.length().
BigInt rank(const Partition& kappa, int m, const CountTable& table);

namespace detail {

Partition conjugate_of_parts(std::span<const int> parts);

template <class Visitor>
void visit_conjugates(std::vector<int>& mu, int remaining, int bound, Visitor& visit) {
  if (remaining == 0) {
    visit(conjugate_of_parts(mu));
    return;
  }
  const int top = std::min(bound, remaining);
  for (int p = 1; p <= top; ++p) {
    mu.push_back(p);
    visit_conjugates(mu, remaining - p, p, visit);
    mu.pop_back();
  }
}

}  // namespace detail

template <class Visitor>
void for_each_partition(int n, int length_min, int length_max, Visitor&& visit) {
  if (n < 0) throw DomainError("for_each_partition: n must be nonnegative");
  if (n == 0) {
    if (length_min <= 0 && length_max >= 0) visit(Partition{});
    return;
  }
  // The length of kappa is the largest part of its conjugate mu.
  std::vector<int> mu;
  mu.reserve(static_cast<std::size_t>(n));
  const int lo = std::max(length_min, 1);
  const int hi = std::min(length_max, n);
  for (int first = lo; first <= hi; ++first) {
    mu.push_back(first);
    detail::visit_conjugates(mu, n - first, first, visit);
    mu.pop_back();
  }
}

}  // namespace partlaw
