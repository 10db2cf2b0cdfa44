#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "partlaw/partition.hpp"

namespace partlaw {

enum class TheoremTag { T1_Mu, T2_Gamma, T3_Gumbel, T4_TW, T5_LLN };

std::string to_string(TheoremTag tag);
TheoremTag theorem_from_string(const std::string& s);

struct SpectralSample {
  int kappa_n = 0;
  int kappa_m = 0;
  double lambda = 0.0;
  double normalized = 0.0;
  TheoremTag theorem_tag = TheoremTag::T1_Mu;
};

// lambda_kappa = n (m - 1) + alpha a(kappa') - a(kappa).
template <class Scalar>
Scalar eigenvalue_by_weights(const Partition& kappa, const Scalar& alpha) {
  const std::int64_t n = kappa.n();
  const std::int64_t m = kappa.length();
  return Scalar(n * (m - 1)) + alpha * Scalar(weight_a(conjugate(kappa))) - Scalar(weight_a(kappa));
}

// lambda_kappa = (m - alpha/2) n + sum_i (alpha/2 k_i - i) k_i.
template <class Scalar>
Scalar eigenvalue_by_rows(const Partition& kappa, const Scalar& alpha) {
  const Scalar half_alpha = alpha / Scalar(2);
  Scalar acc = (Scalar(kappa.length()) - half_alpha) * Scalar(kappa.n());
  for (int i = 1; i <= kappa.length(); ++i) {
    const Scalar k(kappa.part(i));
    acc += (half_alpha * k - Scalar(i)) * k;
  }
  return acc;
}

// Evaluates both forms and returns their common value. Rational scalars must
// agree exactly; floating point ones to a relative 1e-12. Throws
// ConsistencyError otherwise.
template <class Scalar>
Scalar eigenvalue(const Partition& kappa, const Scalar& alpha) {
  if (kappa.empty()) throw DomainError("eigenvalue: partition must be nonempty");
  if (!(alpha > Scalar(0))) throw DomainError("eigenvalue: alpha must be positive");
  const Scalar by_weights = eigenvalue_by_weights(kappa, alpha);
  const Scalar by_rows = eigenvalue_by_rows(kappa, alpha);
  if constexpr (std::is_floating_point_v<Scalar>) {
    const Scalar scale = std::max<Scalar>(Scalar(1), std::abs(by_weights));
    if (std::abs(by_weights - by_rows) > Scalar(1e-12) * scale)
      throw ConsistencyError("eigenvalue: forms disagree for " + kappa.to_string());
  } else {
    if (by_weights != by_rows) throw ConsistencyError("eigenvalue: forms disagree for " + kappa.to_string());
  }
  return by_weights;
}

// Exact evaluation at rational alpha.
Rational eigenvalue_exact(const Partition& kappa, const Rational& alpha);

struct NormalizationParams {
  double alpha = 1.0;
  std::optional<int> m;             // required for T2
  std::optional<double> lln_scale;  // the divergent a_n, required for T5
};

// Scales lambda the way each limit theorem does:
//   T1  lambda / n^2
//   T2  (lambda - a_n) / b_n, a_n = (m - alpha - 1) n / 2 + alpha n^2 / (2m), b_n = n / (2m)
//   T3  c n^{-3/2} lambda - log(sqrt(n) / c), c = pi / sqrt(6)
//   T4  (lambda - 2 n^{3/2}) / n^{7/6}
//   T5  (lambda - (2 + 128 (alpha - 1) / (27 pi^2)) n^{3/2}) / (n^{5/4} a_n)
double normalize(double lambda, int n, TheoremTag tag, const NormalizationParams& params);

// Centering and scale of the Gamma limit for restricted Jack measures.
double gamma_centering(int n, int m, double alpha);
double gamma_scale(int n, int m);

// 2 + 128 (alpha - 1) / (27 pi^2), the Plancherel law-of-large-numbers constant.
double plancherel_lln_constant(double alpha);

struct MeanVariance {
  Rational mean;
  std::optional<Rational> variance;  // absent when the support has one element
  std::uint64_t count = 0;
};

// Exact sample mean and sample variance (divisor r - 1) of lambda over all
// of P'_n(m), in rational arithmetic.
MeanVariance exact_mean_variance(int n, int m, const Rational& alpha);

inline constexpr double kExactMomentSupportLimit = 1e7;

}  // namespace partlaw
