#include "partlaw/tracy_widom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "partlaw/types.hpp"

namespace partlaw {

AiryPair airy_asymptotic(double x) {
  if (x < 3.0) throw DomainError("airy_asymptotic: x must be at least 3");
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double pre = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  // u_k = (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k) u_{k-1},  v_k = -(6k+1)/(6k-1) u_k
  double u = 1.0;
  double sum_ai = 1.0;
  double sum_dai = 1.0;
  double zpow = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    zpow *= -1.0 / zeta;
    const double term = u * zpow;
    if (std::abs(term) > last) break;  // asymptotic series starts to diverge
    last = std::abs(term);
    sum_ai += term;
    sum_dai += v * zpow;
    if (last < 1e-17) break;
  }
  const double x14 = std::pow(x, 0.25);
  return {pre / x14 * sum_ai, -pre * x14 * sum_dai};
}

double hastings_mcleod_left(double s) {
  if (s > -4.0) throw DomainError("hastings_mcleod_left: needs s <= -4");
  const double u = 1.0 / (s * s * s);
  return std::sqrt(-s / 2.0) * (1.0 + u * (1.0 / 8.0 + u * (-73.0 / 128.0 + u * 10657.0 / 1024.0)));
}

namespace {

using State = std::array<double, 4>;  // q, q', I, J

struct PainleveII {
  void operator()(const State& y, State& dy, double s) const {
    dy[0] = y[1];
    dy[1] = s * y[0] + 2.0 * y[0] * y[0] * y[0];
    dy[2] = -y[3];
    dy[3] = -y[0] * y[0];
  }
};

// Below the switch q is prescribed and only I and J are integrated.
struct LeftTail {
  void operator()(const State& y, State& dy, double s) const {
    const double q = hastings_mcleod_left(s);
    dy[0] = 0.0;
    dy[1] = 0.0;
    dy[2] = -y[3];
    dy[3] = -q * q;
  }
};

// Exact Airy identities: int_x^inf Ai^2 = Ai'^2 - x Ai^2 and
// int_x^inf (t - x) Ai^2 = (2x^2 Ai^2 - 2x Ai'^2 - Ai Ai') / 3.
State airy_boundary(double x) {
  const auto [ai, dai] = airy_asymptotic(x);
  const double j = dai * dai - x * ai * ai;
  const double i = (2.0 * x * x * ai * ai - 2.0 * x * dai * dai - ai * dai) / 3.0;
  return {ai, dai, std::max(i, 0.0), std::max(j, 0.0)};
}

double left_tail_exponent(double s) {
  const double a = std::abs(s);
  return -a * a * a / 12.0 - std::log(a) / 8.0;
}

}  // namespace

TWSolution TWSolution::solve(const TWOptions& options) {
  if (!(options.s_max > options.s_min) || !(options.grid_step > 0.0) || !(options.tolerance > 0.0))
    throw DomainError("TWSolution: invalid options");
  if (options.s_max < 3.0) throw DomainError("TWSolution: s_max must be at least 3 for Airy boundary data");
  if (options.left_switch > -4.0 || options.left_switch < options.s_min)
    throw DomainError("TWSolution: left_switch must lie in [s_min, -4]");

  TWSolution sol;
  sol.options_ = options;
  // Descending grid, split at left_switch (which belongs to both pieces).
  std::vector<double> upper;
  std::vector<double> lower{options.left_switch};
  for (std::size_t k = 0;; ++k) {
    const double s = options.s_max - static_cast<double>(k) * options.grid_step;
    if (s <= options.s_min) break;
    if (s > options.left_switch)
      upper.push_back(s);
    else if (s < options.left_switch)
      lower.push_back(s);
  }
  upper.push_back(options.left_switch);
  lower.push_back(options.s_min);

  namespace ode = boost::numeric::odeint;
  // Relative control only: q is about 1e-8 at s = 8, and any absolute
  // error there is an error in the amplitude of the unstable Ai direction.
  auto stepper = ode::make_dense_output(options.tolerance * 1e-12, options.tolerance, ode::runge_kutta_dopri5<State>());
  double reached = options.s_max;
  bool skip_first = false;
  bool tail_phase = false;
  auto observe = [&](State st, double s) {
    if (tail_phase) st[0] = hastings_mcleod_left(s);
    if (!std::isfinite(st[0]) || !std::isfinite(st[2]) || !std::isfinite(st[3]) || st[0] <= 0.0) {
      std::ostringstream msg;
      msg << "TWSolution: Painleve II integration lost the Hastings-McLeod branch near s=" << s << " (q=" << st[0]
          << ", last good s=" << reached << ")";
      throw NumericError(msg.str());
    }
    reached = s;
    if (skip_first) {
      skip_first = false;
      return;
    }
    sol.s_.push_back(s);
    sol.q_.push_back(st[0]);
    sol.dq_.push_back(st[1]);
    sol.i_.push_back(st[2]);
    sol.j_.push_back(st[3]);
  };
  try {
    State y = airy_boundary(options.s_max);
    ode::integrate_times(stepper, PainleveII{}, y, upper.begin(), upper.end(), -options.grid_step / 4.0, observe);
    // Continue I and J with q from the left expansion; keep the ODE's I, J.
    y[0] = hastings_mcleod_left(options.left_switch);
    y[1] = 0.0;
    skip_first = true;
    tail_phase = true;
    ode::integrate_times(stepper, LeftTail{}, y, lower.begin(), lower.end(), -options.grid_step / 4.0, observe);
  } catch (const NumericError&) {
    throw;
  } catch (const std::exception& e) {
    std::ostringstream msg;
    msg << "TWSolution: stepper failure after s=" << reached << ": " << e.what();
    throw NumericError(msg.str());
  }
  sol.f2_.reserve(sol.i_.size());
  for (double v : sol.i_) sol.f2_.push_back(std::exp(-v));
  return sol;
}

double TWSolution::tail_integral_at(double s) const {
  const State st = airy_boundary(s);
  return st[2];
}

double TWSolution::integral_at(double s) const {
  // Grid is descending; locate k with s_[k] >= s >= s_[k+1].
  const auto it = std::lower_bound(s_.begin(), s_.end(), s, std::greater<>());
  std::size_t k = static_cast<std::size_t>(it - s_.begin());
  if (k == 0) return i_.front();
  if (k >= s_.size()) return i_.back();
  k -= 1;
  const double s0 = s_[k + 1];
  const double s1 = s_[k];
  const double h = s1 - s0;
  const double y0 = i_[k + 1];
  const double y1 = i_[k];
  // I' = -J; limit slopes so the cubic stays monotone (Fritsch-Carlson).
  double m0 = -j_[k + 1];
  double m1 = -j_[k];
  const double secant = (y1 - y0) / h;
  if (secant == 0.0) {
    m0 = m1 = 0.0;
  } else {
    const double a = m0 / secant;
    const double b = m1 / secant;
    const double r = a * a + b * b;
    if (a < 0.0 || b < 0.0) {
      m0 = m1 = secant;
    } else if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      m0 = tau * a * secant;
      m1 = tau * b * secant;
    }
  }
  const double t = (s - s0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * m0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * m1;
}

double TWSolution::cdf(double s) const {
  if (std::isnan(s)) return s;
  if (s >= options_.s_max) {
    if (std::isinf(s)) return 1.0;
    return std::exp(-tail_integral_at(s));
  }
  if (s <= options_.s_min) {
    if (std::isinf(s)) return 0.0;
    return f2_.back() * std::exp(left_tail_exponent(s) - left_tail_exponent(options_.s_min));
  }
  return std::exp(-integral_at(s));
}

double TWSolution::pdf(double s) const {
  if (std::isnan(s)) return s;
  if (s >= options_.s_max) {
    if (std::isinf(s)) return 0.0;
    const State st = airy_boundary(s);
    return std::exp(-st[2]) * st[3];
  }
  if (s <= options_.s_min) {
    if (std::isinf(s)) return 0.0;
    const double a = std::abs(s);
    return cdf(s) * (a * a / 4.0 + 1.0 / (8.0 * a));
  }
  const auto it = std::lower_bound(s_.begin(), s_.end(), s, std::greater<>());
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - s_.begin()), s_.size() - 1);
  const std::size_t k0 = k == 0 ? 0 : k - 1;
  const double w = (s_[k0] == s_[k]) ? 0.0 : (s_[k0] - s) / (s_[k0] - s_[k]);
  const double j = (1.0 - w) * j_[k0] + w * j_[k];
  return cdf(s) * j;
}

void TWSolution::write_csv(std::ostream& out) const {
  out << "s,q,F2\n";
  out << std::setprecision(17);
  for (std::size_t k = 0; k < s_.size(); ++k) out << s_[k] << ',' << q_[k] << ',' << f2_[k] << '\n';
}

const TWSolution& tracy_widom_solution() {
  static const TWSolution solution = TWSolution::solve();
  return solution;
}

double tracy_widom_f2(double s) { return tracy_widom_solution().cdf(s); }

}  // namespace partlaw
