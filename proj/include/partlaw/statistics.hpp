#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace partlaw {

class LimitLaw;

// sup_i max(|i/N - F(x_i)|, |(i-1)/N - F(x_i)|) over ascending samples.
// Throws DomainError on empty input or unsorted samples.
double ks_statistic(std::span<const double> sorted_samples, const std::function<double(double)>& cdf);
double ks_statistic(std::span<const double> sorted_samples, const LimitLaw& law);

// ECDF value i/N at each ascending sample, ties resolved to the last index.
std::vector<double> ecdf_values(std::span<const double> sorted_samples);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;

  bool passes(double significance) const { return p_value > significance; }
};

// Pearson goodness of fit of observed counts against cell probabilities
// that sum to one. Cells with zero probability must have zero count.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> probabilities);

// (1/2) sum |p_i - q_i|.
double total_variation(std::span<const double> p, std::span<const double> q);

// Equal-width bin counts on [lo, hi]; the last bin is closed.
std::vector<std::uint64_t> bin_counts(std::span<const double> values, double lo, double hi, int bins);

}  // namespace partlaw
