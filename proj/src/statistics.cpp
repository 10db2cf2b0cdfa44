#include "partlaw/statistics.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "partlaw/limits.hpp"
#include "partlaw/types.hpp"

namespace partlaw {

double ks_statistic(std::span<const double> sorted_samples, const std::function<double(double)>& cdf) {
  if (sorted_samples.empty()) throw DomainError("ks_statistic: no samples");
  if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
    throw DomainError("ks_statistic: samples must be sorted ascending");
  const double n = static_cast<double>(sorted_samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i]);
    sup = std::max({sup, std::abs((i + 1) / n - f), std::abs(i / n - f)});
  }
  return sup;
}

double ks_statistic(std::span<const double> sorted_samples, const LimitLaw& law) {
  return ks_statistic(sorted_samples, [&law](double x) { return law.cdf(x); });
}

std::vector<double> ecdf_values(std::span<const double> sorted_samples) {
  const std::size_t n = sorted_samples.size();
  std::vector<double> out(n);
  std::size_t k = n;
  while (k > 0) {
    std::size_t last = k;  // ties share the ecdf value of the last copy
    const double x = sorted_samples[k - 1];
    while (k > 0 && sorted_samples[k - 1] == x) {
      out[k - 1] = static_cast<double>(last) / static_cast<double>(n);
      --k;
    }
  }
  return out;
}

ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.empty())
    throw DomainError("chi_square_test: need matching nonempty cells");
  double total = 0.0;
  for (auto c : observed) total += static_cast<double>(c);
  if (total <= 0.0) throw DomainError("chi_square_test: no observations");
  double stat = 0.0;
  int cells = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const double p = probabilities[k];
    if (p < 0.0) throw DomainError("chi_square_test: negative probability");
    if (p == 0.0) {
      if (observed[k] != 0) throw DomainError("chi_square_test: count in a zero-probability cell");
      continue;
    }
    const double expected = total * p;
    const double d = static_cast<double>(observed[k]) - expected;
    stat += d * d / expected;
    ++cells;
  }
  ChiSquareResult r;
  r.statistic = stat;
  r.degrees_of_freedom = cells - 1;
  if (r.degrees_of_freedom < 1) return r;
  const boost::math::chi_squared dist(r.degrees_of_freedom);
  r.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  return r;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("total_variation: size mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) s += std::abs(p[k] - q[k]);
  return s / 2.0;
}

std::vector<std::uint64_t> bin_counts(std::span<const double> values, double lo, double hi, int bins) {
  if (bins < 1) throw DomainError("bin_counts: need at least one bin");
  if (!(hi > lo)) hi = lo + 1.0;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
  const double width = (hi - lo) / bins;
  for (double v : values) {
    if (v < lo || v > hi) continue;
    auto k = static_cast<std::size_t>(std::floor((v - lo) / width));
    counts[std::min(k, counts.size() - 1)] += 1;
  }
  return counts;
}

}  // namespace partlaw
