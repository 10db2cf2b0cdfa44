#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "partlaw/rng.hpp"
#include "partlaw/tracy_widom.hpp"

namespace partlaw {

// zeta(3) from the alternating central-binomial series
//   zeta(3) = 5/2 sum_{k>=1} (-1)^{k+1} / (k^3 C(2k, k)),
// whose terms shrink by about 4x each; 40 terms give full double precision.
double zeta3();

// c = pi / sqrt(6).
double uniform_scale_constant();

// a = 2 zeta(3) / c^3, the limit of n^{-3/2} sum k_j^2 under the uniform measure.
double uniform_lln_constant();

// Gumbel shift K = 6 zeta(3) (1 - alpha) / pi^2 and G(x) = exp(-exp(-(x + K))).
double gumbel_shift(double alpha);
double gumbel_cdf(double x, double alpha);
double gumbel_pdf(double x, double alpha);

// Kerov's limit shape: (2/pi)(x asin(x/2) + sqrt(4 - x^2)) on |x| <= 2, |x| outside.
double kerov_omega(double x);

// (alpha/2) sum xi^2 / (sum xi)^2 for nonnegative xi with positive sum.
double mu_statistic(std::span<const double> xi, double alpha);

// One draw of mu: m unit exponentials pushed through mu_statistic.
double mu_sample(int m, double alpha, RngStream& rng);

// cdf of mu. m = 2, 3 use the closed forms (in u = 2t/alpha)
//   m = 2: sqrt(2u - 1) on [1/2, 1]
//   m = 3: (2/sqrt3) pi (u - 1/3) on [1/3, 1/2),
//          (2/sqrt3) ((u - 1/3)(pi - 3 acos(1/sqrt(6u - 2))) + (sqrt6/2) sqrt(u - 1/2)) on [1/2, 1].
// m >= 4 falls back to mu_cdf_monte_carlo with default settings.
double mu_cdf(double t, int m, double alpha);
double mu_pdf(double t, int m, double alpha);

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::size_t draws = 0;
};

inline constexpr std::size_t kMuMonteCarloDraws = 1'000'000;
inline constexpr std::uint64_t kMuMonteCarloSeed = 0x6d75'6c61'77ULL;

MonteCarloEstimate mu_cdf_monte_carlo(double t, int m, double alpha, std::size_t draws = kMuMonteCarloDraws,
                                      std::uint64_t seed = kMuMonteCarloSeed);

// Gamma limit of restricted Jack eigenvalues: beta = 2/alpha,
// shape v = (m - 1)(m beta + 2) / 4, density x^{v-1} e^{-beta x/2} / (Gamma(v) (2/beta)^v).
struct GammaLimit {
  int m = 2;
  double alpha = 1.0;
  double beta = 2.0;
  double shape = 1.5;

  double centering(int n) const;  // a_n
  double scale(int n) const;      // b_n
  double cdf(double x) const;
  double pdf(double x) const;
  double mean() const { return shape * 2.0 / beta; }
};

GammaLimit gamma_limit(int m, double alpha);

// A limiting law that can be evaluated pointwise. PointMass serves the
// law-of-large-numbers experiment, whose normalized statistic tends to 0.
class LimitLaw {
 public:
  enum class Kind { Mu, Gamma, Gumbel, TracyWidom2, PointMass };

  static LimitLaw mu(int m, double alpha, std::size_t mc_draws = kMuMonteCarloDraws,
                     std::uint64_t mc_seed = kMuMonteCarloSeed);
  static LimitLaw gamma(int m, double alpha);
  static LimitLaw gumbel(double alpha);
  static LimitLaw tracy_widom2();
  static LimitLaw point_mass(double at = 0.0);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  double alpha() const { return alpha_; }
  std::string name() const;

  double cdf(double x) const;
  // Density where one exists; NaN for PointMass.
  double pdf(double x) const;
  // Standard error of cdf(x); nonzero only for Monte Carlo backed mu.
  double cdf_standard_error(double x) const;

 private:
  Kind kind_ = Kind::PointMass;
  int m_ = 0;
  double alpha_ = 1.0;
  double at_ = 0.0;
  GammaLimit gamma_{};
  std::shared_ptr<const std::vector<double>> mu_sample_;  // sorted, m >= 4
  const TWSolution* tw_ = nullptr;
};

std::string to_string(LimitLaw::Kind kind);

}  // namespace partlaw
