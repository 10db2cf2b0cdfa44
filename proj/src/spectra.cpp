#include "partlaw/spectra.hpp"

#include <numbers>

#include "partlaw/measures.hpp"

namespace partlaw {

std::string to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::T1_Mu: return "t1";
    case TheoremTag::T2_Gamma: return "t2";
    case TheoremTag::T3_Gumbel: return "t3";
    case TheoremTag::T4_TW: return "t4";
    case TheoremTag::T5_LLN: return "t5";
  }
  return "unknown";
}

TheoremTag theorem_from_string(const std::string& s) {
  if (s == "t1") return TheoremTag::T1_Mu;
  if (s == "t2") return TheoremTag::T2_Gamma;
  if (s == "t3") return TheoremTag::T3_Gumbel;
  if (s == "t4") return TheoremTag::T4_TW;
  if (s == "t5") return TheoremTag::T5_LLN;
  throw ConfigError("unknown theorem tag '" + s + "'");
}

Rational eigenvalue_exact(const Partition& kappa, const Rational& alpha) { return eigenvalue(kappa, alpha); }

double gamma_centering(int n, int m, double alpha) {
  const double nn = n;
  return (m - alpha - 1.0) / 2.0 * nn + alpha / (2.0 * m) * nn * nn;
}

double gamma_scale(int n, int m) { return static_cast<double>(n) / (2.0 * m); }

double plancherel_lln_constant(double alpha) {
  return 2.0 + 128.0 / (27.0 * std::numbers::pi * std::numbers::pi) * (alpha - 1.0);
}

double normalize(double lambda, int n, TheoremTag tag, const NormalizationParams& params) {
  if (n < 1) throw DomainError("normalize: n must be positive");
  const double nn = n;
  switch (tag) {
    case TheoremTag::T1_Mu: return lambda / (nn * nn);
    case TheoremTag::T2_Gamma:
      if (!params.m) throw DomainError("normalize: T2 requires m");
      if (*params.m < 1) throw DomainError("normalize: T2 requires m >= 1");
      return (lambda - gamma_centering(n, *params.m, params.alpha)) / gamma_scale(n, *params.m);
    case TheoremTag::T3_Gumbel: {
      const double c = std::numbers::pi / std::sqrt(6.0);
      return c * lambda / std::pow(nn, 1.5) - std::log(std::sqrt(nn) / c);
    }
    case TheoremTag::T4_TW: return (lambda - 2.0 * std::pow(nn, 1.5)) / std::pow(nn, 7.0 / 6.0);
    case TheoremTag::T5_LLN:
      if (!params.lln_scale) throw DomainError("normalize: T5 requires the divergent scale a_n");
      return (lambda - plancherel_lln_constant(params.alpha) * std::pow(nn, 1.5)) /
             (std::pow(nn, 1.25) * *params.lln_scale);
  }
  throw DomainError("normalize: unknown theorem tag");
}

MeanVariance exact_mean_variance(int n, int m, const Rational& alpha) {
  if (m < 1 || m > n) throw DomainError("exact_mean_variance: need 1 <= m <= n");
  if (alpha <= 0) throw DomainError("exact_mean_variance: alpha must be positive");
  if (approx_count_at_most(n - m, m) > kExactMomentSupportLimit)
    throw ResourceError("exact_mean_variance: support too large to enumerate");

  // With alpha = p/q, q * lambda is an integer; accumulate those exactly.
  const BigInt p = boost::multiprecision::numerator(alpha);
  const BigInt q = boost::multiprecision::denominator(alpha);
  BigInt s1 = 0;
  BigInt s2 = 0;
  std::uint64_t r = 0;
  for_each_partition(n, m, m, [&](const Partition& kappa) {
    const BigInt scaled = q * (static_cast<std::int64_t>(n) * (m - 1) - weight_a(kappa)) + p * weight_a(conjugate(kappa));
    s1 += scaled;
    s2 += scaled * scaled;
    ++r;
  });
  MeanVariance out;
  out.count = r;
  out.mean = Rational(s1, q * r);
  if (r > 1) {
    // (sum x^2 - (sum x)^2 / r) / (r - 1), all over q^2.
    const Rational centered = Rational(s2) - Rational(s1 * s1, BigInt(r));
    out.variance = centered / Rational(BigInt(r - 1) * q * q);
  }
  return out;
}

}  // namespace partlaw
