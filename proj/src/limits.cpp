#include "partlaw/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "partlaw/types.hpp"

namespace partlaw {

double zeta3() {
  double sum = 0.0;
  double central = 1.0;  // C(2k, k)
  for (int k = 1; k <= 40; ++k) {
    central = central * (2.0 * k) * (2.0 * k - 1.0) / (static_cast<double>(k) * k);
    const double term = 1.0 / (static_cast<double>(k) * k * k * central);
    sum += (k % 2 == 1) ? term : -term;
  }
  return 2.5 * sum;
}

double uniform_scale_constant() { return std::numbers::pi / std::sqrt(6.0); }

double uniform_lln_constant() {
  const double c = uniform_scale_constant();
  return 2.0 * zeta3() / (c * c * c);
}

double gumbel_shift(double alpha) {
  return 6.0 * zeta3() / (std::numbers::pi * std::numbers::pi) * (1.0 - alpha);
}

double gumbel_cdf(double x, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("gumbel_cdf: alpha must be positive");
  return std::exp(-std::exp(-(x + gumbel_shift(alpha))));
}

double gumbel_pdf(double x, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("gumbel_pdf: alpha must be positive");
  const double z = x + gumbel_shift(alpha);
  return std::exp(-z - std::exp(-z));
}

double kerov_omega(double x) {
  if (std::abs(x) >= 2.0) return std::abs(x);
  return 2.0 / std::numbers::pi * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

double mu_statistic(std::span<const double> xi, double alpha) {
  double sum = 0.0;
  double squares = 0.0;
  for (double v : xi) {
    sum += v;
    squares += v * v;
  }
  if (!(sum > 0.0)) throw DomainError("mu_statistic: weights must have positive sum");
  return alpha / 2.0 * squares / (sum * sum);
}

double mu_sample(int m, double alpha, RngStream& rng) {
  if (m < 2) throw DomainError("mu_sample: m must be at least 2");
  std::vector<double> xi(static_cast<std::size_t>(m));
  for (auto& v : xi) v = rng.exponential();
  return mu_statistic(xi, alpha);
}

namespace {

void check_mu_params(int m, double alpha) {
  if (m < 2) throw DomainError("mu: m must be at least 2");
  if (!(alpha > 0.0)) throw DomainError("mu: alpha must be positive");
}

double nu_cdf_closed(double u, int m) {
  const double lo = 1.0 / m;
  if (u <= lo) return 0.0;
  if (u >= 1.0) return 1.0;
  if (m == 2) return std::sqrt(2.0 * u - 1.0);
  const double k = 2.0 / std::sqrt(3.0);
  if (u < 0.5) return k * std::numbers::pi * (u - 1.0 / 3.0);
  const double angle = std::acos(1.0 / std::sqrt(6.0 * u - 2.0));
  return k * ((u - 1.0 / 3.0) * (std::numbers::pi - 3.0 * angle) + std::sqrt(6.0) / 2.0 * std::sqrt(u - 0.5));
}

double nu_pdf_closed(double u, int m) {
  const double lo = 1.0 / m;
  if (u < lo || u > 1.0) return 0.0;
  if (m == 2) return u > 0.5 ? 1.0 / std::sqrt(2.0 * u - 1.0) : std::numeric_limits<double>::infinity();
  const double k = 2.0 / std::sqrt(3.0);
  if (u < 0.5) return k * std::numbers::pi;
  return k * (std::numbers::pi - 3.0 * std::acos(1.0 / std::sqrt(6.0 * u - 2.0)));
}

std::vector<double> sorted_mu_sample(int m, double alpha, std::size_t draws, std::uint64_t seed) {
  RngStream rng(seed, static_cast<std::uint64_t>(m));
  std::vector<double> xs(draws);
  for (auto& x : xs) x = mu_sample(m, alpha, rng);
  std::sort(xs.begin(), xs.end());
  return xs;
}

double empirical_cdf(const std::vector<double>& sorted, double t) {
  const auto below = std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
  return static_cast<double>(below) / static_cast<double>(sorted.size());
}

}  // namespace

double mu_cdf(double t, int m, double alpha) {
  check_mu_params(m, alpha);
  if (m <= 3) return nu_cdf_closed(2.0 * t / alpha, m);
  return mu_cdf_monte_carlo(t, m, alpha).value;
}

double mu_pdf(double t, int m, double alpha) {
  check_mu_params(m, alpha);
  if (m > 3) throw DomainError("mu_pdf: closed form available for m = 2, 3 only");
  return 2.0 / alpha * nu_pdf_closed(2.0 * t / alpha, m);
}

MonteCarloEstimate mu_cdf_monte_carlo(double t, int m, double alpha, std::size_t draws, std::uint64_t seed) {
  check_mu_params(m, alpha);
  if (draws == 0) throw DomainError("mu_cdf_monte_carlo: need at least one draw");
  RngStream rng(seed, static_cast<std::uint64_t>(m));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < draws; ++i)
    if (mu_sample(m, alpha, rng) <= t) ++hits;
  const double p = static_cast<double>(hits) / static_cast<double>(draws);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(draws)), draws};
}

double GammaLimit::centering(int n) const {
  const double nn = n;
  return (m - alpha - 1.0) / 2.0 * nn + alpha / (2.0 * m) * nn * nn;
}

double GammaLimit::scale(int n) const { return static_cast<double>(n) / (2.0 * m); }

double GammaLimit::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return boost::math::gamma_p(shape, beta * x / 2.0);
}

double GammaLimit::pdf(double x) const {
  if (x < 0.0 || std::isinf(x)) return 0.0;
  if (x == 0.0) return shape < 1.0 ? std::numeric_limits<double>::infinity() : (shape == 1.0 ? beta / 2.0 : 0.0);
  return boost::math::gamma_p_derivative(shape, beta * x / 2.0) * beta / 2.0;
}

GammaLimit gamma_limit(int m, double alpha) {
  if (m < 2) throw DomainError("gamma_limit: m must be at least 2");
  if (!(alpha > 0.0)) throw DomainError("gamma_limit: alpha must be positive");
  GammaLimit g;
  g.m = m;
  g.alpha = alpha;
  g.beta = 2.0 / alpha;
  g.shape = 0.25 * (m - 1) * (m * g.beta + 2.0);
  return g;
}

LimitLaw LimitLaw::mu(int m, double alpha, std::size_t mc_draws, std::uint64_t mc_seed) {
  check_mu_params(m, alpha);
  LimitLaw law;
  law.kind_ = Kind::Mu;
  law.m_ = m;
  law.alpha_ = alpha;
  if (m > 3) law.mu_sample_ = std::make_shared<const std::vector<double>>(sorted_mu_sample(m, alpha, mc_draws, mc_seed));
  return law;
}

LimitLaw LimitLaw::gamma(int m, double alpha) {
  LimitLaw law;
  law.kind_ = Kind::Gamma;
  law.m_ = m;
  law.alpha_ = alpha;
  law.gamma_ = gamma_limit(m, alpha);
  return law;
}

LimitLaw LimitLaw::gumbel(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("gumbel: alpha must be positive");
  LimitLaw law;
  law.kind_ = Kind::Gumbel;
  law.alpha_ = alpha;
  return law;
}

LimitLaw LimitLaw::tracy_widom2() {
  LimitLaw law;
  law.kind_ = Kind::TracyWidom2;
  law.tw_ = &tracy_widom_solution();
  return law;
}

LimitLaw LimitLaw::point_mass(double at) {
  LimitLaw law;
  law.kind_ = Kind::PointMass;
  law.at_ = at;
  return law;
}

std::string LimitLaw::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Mu: os << "mu(m=" << m_ << ",alpha=" << alpha_ << ")"; break;
    case Kind::Gamma:
      os << "gamma(m=" << m_ << ",alpha=" << alpha_ << ",v=" << gamma_.shape << ",beta=" << gamma_.beta << ")";
      break;
    case Kind::Gumbel: os << "gumbel(alpha=" << alpha_ << ",K=" << gumbel_shift(alpha_) << ")"; break;
    case Kind::TracyWidom2: os << "tracy_widom_2"; break;
    case Kind::PointMass: os << "point_mass(" << at_ << ")"; break;
  }
  return os.str();
}

double LimitLaw::cdf(double x) const {
  switch (kind_) {
    case Kind::Mu: return mu_sample_ ? empirical_cdf(*mu_sample_, x) : mu_cdf(x, m_, alpha_);
    case Kind::Gamma: return gamma_.cdf(x);
    case Kind::Gumbel: return gumbel_cdf(x, alpha_);
    case Kind::TracyWidom2: return tw_->cdf(x);
    case Kind::PointMass: return x >= at_ ? 1.0 : 0.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double LimitLaw::pdf(double x) const {
  switch (kind_) {
    case Kind::Mu: return mu_sample_ ? std::numeric_limits<double>::quiet_NaN() : mu_pdf(x, m_, alpha_);
    case Kind::Gamma: return gamma_.pdf(x);
    case Kind::Gumbel: return gumbel_pdf(x, alpha_);
    case Kind::TracyWidom2: return tw_->pdf(x);
    case Kind::PointMass: return std::numeric_limits<double>::quiet_NaN();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double LimitLaw::cdf_standard_error(double x) const {
  if (!mu_sample_) return 0.0;
  const double p = empirical_cdf(*mu_sample_, x);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(mu_sample_->size()));
}

std::string to_string(LimitLaw::Kind kind) {
  switch (kind) {
    case LimitLaw::Kind::Mu: return "mu";
    case LimitLaw::Kind::Gamma: return "gamma";
    case LimitLaw::Kind::Gumbel: return "gumbel";
    case LimitLaw::Kind::TracyWidom2: return "tw2";
    case LimitLaw::Kind::PointMass: return "point_mass";
  }
  return "unknown";
}

}  // namespace partlaw
