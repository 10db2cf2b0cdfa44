#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partlaw/partition.hpp"
#include "partlaw/rng.hpp"

namespace partlaw {

enum class MeasureKind { RestrictedUniform, Uniform, Plancherel, RestrictedJack };

std::string to_string(MeasureKind kind);

struct MeasureSpec {
  MeasureKind kind = MeasureKind::Uniform;
  int n = 0;
  std::optional<int> m;         // restricted kinds only
  bool exact_length = false;    // P'_n(m) instead of P_n(m)
  std::optional<double> alpha;  // restricted Jack only

  static MeasureSpec restricted_uniform(int n, int m, bool exact_length = false);
  static MeasureSpec uniform(int n);
  static MeasureSpec plancherel(int n);
  static MeasureSpec restricted_jack(int n, int m, double alpha, bool exact_length = false);

  bool restricted() const {
    return kind == MeasureKind::RestrictedUniform || kind == MeasureKind::RestrictedJack;
  }

  // Throws ConfigError when parameters are missing or contradictory and
  // DomainError when the support is empty.
  void validate() const;

  // Whether kappa lies in the support.
  bool supports(const Partition& kappa) const;
};

inline constexpr double kRestrictedJackSupportLimit = 1e7;
inline constexpr std::uint64_t kFristedtMaxAttempts = 10'000'000;
inline constexpr int kUniformTableThreshold = 200;

// |P_n(m)| in floating point, for support-size guards without a big table.
double approx_count_at_most(int n, int m);

Partition sample_restricted_uniform(int n, int m, bool exact_length, const CountTable& table, RngStream& rng);

// Exact uniform on P_n by descending a (n, n) count table.
Partition sample_uniform_table(int n, const CountTable& table, RngStream& rng);

// Exact uniform on P_n by Fristedt's grand-canonical method. Multiplicities
// of parts j >= 2 are independent geometrics with ratio x^j, x = exp(-c/sqrt(n)),
// c = pi/sqrt(6); the multiplicity of 1 is then forced to n - S and accepted
// with probability x^(n - S), which is exact because that geometric's mass
// function peaks at zero.
Partition sample_uniform_fristedt(int n, RngStream& rng, std::uint64_t max_attempts = kFristedtMaxAttempts);

// Table descent for small n, Fristedt otherwise.
Partition sample_uniform(int n, RngStream& rng);

// Shape of the RSK insertion tableau of a uniform random permutation.
Partition sample_plancherel(int n, RngStream& rng);

// (log c_kappa(alpha), log c'_kappa(alpha)) with
//   c  = prod (alpha * arm + leg + 1),  c' = prod (alpha * arm + leg + alpha).
std::pair<double, double> jack_hook_log_products(const Partition& kappa, double alpha);

// Log-mass of the unrestricted alpha-Jack measure alpha^n n! / (c c').
double jack_log_pmf(const Partition& kappa, double alpha);

// Restricted Jack measure on P_n(m) (or P'_n(m)), tabulated once and then
// sampled by inverse cdf. Immutable after construction.
class RestrictedJackTable {
 public:
  RestrictedJackTable(int n, int m, double alpha, bool exact_length = false);

  int n() const { return n_; }
  int m() const { return m_; }
  double alpha() const { return alpha_; }
  bool exact_length() const { return exact_length_; }

  std::span<const Partition> support() const { return support_; }
  // log C_{n,m}(alpha) = log sum 1/(c c').
  double log_normalizer() const { return log_normalizer_; }

  Partition sample(RngStream& rng) const;
  double log_pmf(const Partition& kappa) const;

 private:
  int n_;
  int m_;
  double alpha_;
  bool exact_length_;
  std::vector<Partition> support_;
  std::vector<double> log_weight_;
  std::vector<double> cumulative_;
  double log_normalizer_ = 0.0;
};

Partition sample_restricted_jack(int n, int m, double alpha, RngStream& rng);

// Natural log of the exact probability of kappa. DomainError outside support.
double log_pmf(const MeasureSpec& spec, const Partition& kappa);

// A measure with its tables built once; draw() is const and thread-safe.
class PartitionSampler {
 public:
  explicit PartitionSampler(MeasureSpec spec);

  const MeasureSpec& spec() const { return spec_; }
  Partition draw(RngStream& rng) const;
  double log_pmf(const Partition& kappa) const;

 private:
  MeasureSpec spec_;
  std::shared_ptr<const CountTable> table_;
  std::shared_ptr<const RestrictedJackTable> jack_;
  double log_support_size_ = 0.0;
};

}  // namespace partlaw
