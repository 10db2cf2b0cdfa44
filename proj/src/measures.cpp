#include "partlaw/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace partlaw {

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::RestrictedUniform: return "runiform";
    case MeasureKind::Uniform: return "uniform";
    case MeasureKind::Plancherel: return "plancherel";
    case MeasureKind::RestrictedJack: return "rjack";
  }
  return "unknown";
}

MeasureSpec MeasureSpec::restricted_uniform(int n, int m, bool exact_length) {
  return {MeasureKind::RestrictedUniform, n, m, exact_length, std::nullopt};
}
MeasureSpec MeasureSpec::uniform(int n) { return {MeasureKind::Uniform, n, std::nullopt, false, std::nullopt}; }
MeasureSpec MeasureSpec::plancherel(int n) {
  return {MeasureKind::Plancherel, n, std::nullopt, false, std::nullopt};
}
MeasureSpec MeasureSpec::restricted_jack(int n, int m, double alpha, bool exact_length) {
  return {MeasureKind::RestrictedJack, n, m, exact_length, alpha};
}

void MeasureSpec::validate() const {
  if (n < 0) throw ConfigError("measure: n must be nonnegative");
  if (restricted()) {
    if (!m) throw ConfigError("measure " + to_string(kind) + ": m is required");
    if (*m < 1) throw ConfigError("measure: m must be at least 1");
    if (exact_length && *m > n) throw DomainError("measure: exact length m > n has empty support");
  } else {
    if (m) throw ConfigError("measure " + to_string(kind) + ": m applies to restricted measures only");
    if (exact_length) throw ConfigError("measure: exact length applies to restricted measures only");
    if (n < 1) throw ConfigError("measure " + to_string(kind) + ": n must be at least 1");
  }
  if (kind == MeasureKind::RestrictedJack) {
    if (!alpha) throw ConfigError("measure rjack: alpha is required");
    if (!(*alpha > 0.0)) throw ConfigError("measure rjack: alpha must be positive");
  } else if (alpha) {
    throw ConfigError("measure " + to_string(kind) + ": alpha applies to rjack only");
  }
}

bool MeasureSpec::supports(const Partition& kappa) const {
  if (kappa.n() != n) return false;
  if (!restricted()) return true;
  return exact_length ? kappa.length() == *m : kappa.length() <= *m;
}

double approx_count_at_most(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("approx_count_at_most: negative arguments");
  m = std::min(m, n);
  // Partitions into parts <= m, by conjugation.
  std::vector<double> dp(static_cast<std::size_t>(n + 1), 0.0);
  dp[0] = 1.0;
  for (int p = 1; p <= m; ++p)
    for (int x = p; x <= n; ++x) dp[static_cast<std::size_t>(x)] += dp[static_cast<std::size_t>(x - p)];
  return dp[static_cast<std::size_t>(n)];
}

Partition sample_restricted_uniform(int n, int m, bool exact_length, const CountTable& table, RngStream& rng) {
  if (n < 0 || m < 1) throw DomainError("sample_restricted_uniform: need n >= 0 and m >= 1");
  if (!exact_length) return unrank(n, m, rng.uniform_below(table.at_most(n, m)), table);
  if (m > n) throw DomainError("sample_restricted_uniform: exact length m > n has empty support");
  const Partition base = unrank(n - m, m, rng.uniform_below(table.at_most(n - m, m)), table);
  std::vector<int> parts(static_cast<std::size_t>(m), 1);
  for (int i = 1; i <= base.length(); ++i) parts[static_cast<std::size_t>(i - 1)] += base.part(i);
  return Partition(std::move(parts));
}

Partition sample_uniform_table(int n, const CountTable& table, RngStream& rng) {
  if (n < 1) throw DomainError("sample_uniform: n must be at least 1");
  return unrank(n, n, rng.uniform_below(table.at_most(n, n)), table);
}

Partition sample_uniform_fristedt(int n, RngStream& rng, std::uint64_t max_attempts) {
  if (n < 1) throw DomainError("sample_uniform: n must be at least 1");
  const double c = std::numbers::pi / std::sqrt(6.0);
  const double log_x = -c / std::sqrt(static_cast<double>(n));
  const double x = std::exp(log_x);
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n + 1), 0);
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::int64_t total = 0;
    double ratio = x;  // x^j
    bool overflow = false;
    for (int j = 2; j <= n; ++j) {
      ratio *= x;
      const double u = rng.uniform_open01();
      if (u >= ratio) {
        mult[static_cast<std::size_t>(j)] = 0;
        continue;
      }
      // P(M >= k) = ratio^k, so M = floor(log u / log ratio) >= 1 here.
      const auto k = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(std::floor(std::log(u) / (static_cast<double>(j) * log_x))));
      mult[static_cast<std::size_t>(j)] = k;
      total += k * j;
      if (total > n) {
        overflow = true;
        break;
      }
    }
    if (overflow) continue;
    const std::int64_t ones = n - total;
    if (rng.uniform01() >= std::exp(static_cast<double>(ones) * log_x)) continue;
    mult[1] = ones;
    std::vector<int> parts;
    for (int j = n; j >= 1; --j)
      for (std::int64_t k = 0; k < mult[static_cast<std::size_t>(j)]; ++k) parts.push_back(j);
    return Partition(std::move(parts));
  }
  throw ResourceError("sample_uniform_fristedt: no acceptance after " + std::to_string(max_attempts) +
                      " attempts at n=" + std::to_string(n));
}

Partition sample_uniform(int n, RngStream& rng) {
  if (n <= kUniformTableThreshold) {
    const CountTable table(n, n);
    return sample_uniform_table(n, table, rng);
  }
  return sample_uniform_fristedt(n, rng);
}

Partition sample_plancherel(int n, RngStream& rng) {
  if (n < 1) throw DomainError("sample_plancherel: n must be at least 1");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 0);
  for (std::size_t i = word.size() - 1; i > 0; --i)
    std::swap(word[i], word[static_cast<std::size_t>(rng.uniform_below(i + 1))]);

  // Row insertion; rows stay strictly increasing.
  std::vector<std::vector<int>> rows;
  for (int v : word) {
    bool placed = false;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        placed = true;
        break;
      }
      std::swap(*it, v);
    }
    if (!placed) rows.push_back({v});
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return Partition(std::move(shape));
}

std::pair<double, double> jack_hook_log_products(const Partition& kappa, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("jack_hook_log_products: alpha must be positive");
  const Partition cols = conjugate(kappa);
  double log_c = 0.0;
  double log_c_prime = 0.0;
  for (int i = 1; i <= kappa.length(); ++i) {
    for (int j = 1; j <= kappa.part(i); ++j) {
      const double arm = kappa.part(i) - j;
      const double leg = cols.part(j) - i;
      log_c += std::log(alpha * arm + leg + 1.0);
      log_c_prime += std::log(alpha * arm + leg + alpha);
    }
  }
  return {log_c, log_c_prime};
}

double jack_log_pmf(const Partition& kappa, double alpha) {
  const auto [log_c, log_cp] = jack_hook_log_products(kappa, alpha);
  const double n = kappa.n();
  return n * std::log(alpha) + std::lgamma(n + 1.0) - log_c - log_cp;
}

RestrictedJackTable::RestrictedJackTable(int n, int m, double alpha, bool exact_length)
    : n_(n), m_(m), alpha_(alpha), exact_length_(exact_length) {
  MeasureSpec::restricted_jack(n, m, alpha, exact_length).validate();
  const double size = exact_length ? approx_count_at_most(n - m, m) : approx_count_at_most(n, m);
  if (size > kRestrictedJackSupportLimit)
    throw ResourceError("restricted Jack: support of about " + std::to_string(size) + " partitions exceeds limit");

  for_each_partition(n, exact_length ? m : 0, m, [&](const Partition& kappa) {
    const auto [log_c, log_cp] = jack_hook_log_products(kappa, alpha);
    support_.push_back(kappa);
    log_weight_.push_back(-log_c - log_cp);
  });
  const double top = *std::max_element(log_weight_.begin(), log_weight_.end());
  cumulative_.reserve(log_weight_.size());
  double acc = 0.0;
  for (double lw : log_weight_) {
    acc += std::exp(lw - top);
    cumulative_.push_back(acc);
  }
  log_normalizer_ = top + std::log(acc);
}

Partition RestrictedJackTable::sample(RngStream& rng) const {
  const double target = rng.uniform01() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) --it;
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double RestrictedJackTable::log_pmf(const Partition& kappa) const {
  if (kappa.n() != n_ || kappa.length() > m_ || (exact_length_ && kappa.length() != m_))
    throw DomainError("restricted Jack: " + kappa.to_string() + " outside support");
  const auto [log_c, log_cp] = jack_hook_log_products(kappa, alpha_);
  return -log_c - log_cp - log_normalizer_;
}

Partition sample_restricted_jack(int n, int m, double alpha, RngStream& rng) {
  return RestrictedJackTable(n, m, alpha).sample(rng);
}

namespace {

double plancherel_log_pmf(const Partition& kappa) {
  const Partition cols = conjugate(kappa);
  double log_hooks = 0.0;
  for (int i = 1; i <= kappa.length(); ++i)
    for (int j = 1; j <= kappa.part(i); ++j) log_hooks += std::log((kappa.part(i) - j) + (cols.part(j) - i) + 1.0);
  // P = dim^2 / n! = n! / prod(hooks)^2
  return std::lgamma(kappa.n() + 1.0) - 2.0 * log_hooks;
}

}  // namespace

double log_pmf(const MeasureSpec& spec, const Partition& kappa) {
  spec.validate();
  if (!spec.supports(kappa)) throw DomainError("log_pmf: " + kappa.to_string() + " outside support");
  switch (spec.kind) {
    case MeasureKind::RestrictedUniform: {
      const int m = *spec.m;
      const CountTable table(spec.n, std::min(m, spec.n));
      return -log_big(spec.exact_length ? table.exactly(spec.n, m) : table.at_most(spec.n, m));
    }
    case MeasureKind::Uniform: return -log_big(partition_count(spec.n));
    case MeasureKind::Plancherel: return plancherel_log_pmf(kappa);
    case MeasureKind::RestrictedJack:
      return RestrictedJackTable(spec.n, *spec.m, *spec.alpha, spec.exact_length).log_pmf(kappa);
  }
  throw DomainError("log_pmf: unknown measure");
}

PartitionSampler::PartitionSampler(MeasureSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  switch (spec_.kind) {
    case MeasureKind::RestrictedUniform: {
      const int m = std::min(*spec_.m, spec_.n);
      table_ = std::make_shared<const CountTable>(spec_.n, m);
      log_support_size_ =
          log_big(spec_.exact_length ? table_->exactly(spec_.n, *spec_.m) : table_->at_most(spec_.n, m));
      break;
    }
    case MeasureKind::Uniform:
      if (spec_.n <= kUniformTableThreshold) {
        table_ = std::make_shared<const CountTable>(spec_.n, spec_.n);
        log_support_size_ = log_big(table_->at_most(spec_.n, spec_.n));
      } else {
        log_support_size_ = log_big(partition_count(spec_.n));
      }
      break;
    case MeasureKind::Plancherel: break;
    case MeasureKind::RestrictedJack:
      jack_ = std::make_shared<const RestrictedJackTable>(spec_.n, *spec_.m, *spec_.alpha, spec_.exact_length);
      break;
  }
}

Partition PartitionSampler::draw(RngStream& rng) const {
  switch (spec_.kind) {
    case MeasureKind::RestrictedUniform:
      return sample_restricted_uniform(spec_.n, *spec_.m, spec_.exact_length, *table_, rng);
    case MeasureKind::Uniform:
      return table_ ? sample_uniform_table(spec_.n, *table_, rng) : sample_uniform_fristedt(spec_.n, rng);
    case MeasureKind::Plancherel: return sample_plancherel(spec_.n, rng);
    case MeasureKind::RestrictedJack: return jack_->sample(rng);
  }
  throw DomainError("PartitionSampler: unknown measure");
}

double PartitionSampler::log_pmf(const Partition& kappa) const {
  if (!spec_.supports(kappa)) throw DomainError("log_pmf: " + kappa.to_string() + " outside support");
  switch (spec_.kind) {
    case MeasureKind::RestrictedUniform:
    case MeasureKind::Uniform: return -log_support_size_;
    case MeasureKind::Plancherel: return plancherel_log_pmf(kappa);
    case MeasureKind::RestrictedJack: return jack_->log_pmf(kappa);
  }
  throw DomainError("log_pmf: unknown measure");
}

}  // namespace partlaw
