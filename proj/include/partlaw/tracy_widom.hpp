#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace partlaw {

struct AiryPair {
  double ai = 0.0;
  double ai_prime = 0.0;
};

// Left asymptotic expansion of the Hastings-McLeod solution, s <= -4.
double hastings_mcleod_left(double s);

// Ai and Ai' from the large-x asymptotic series, summed up to the smallest
// term. Relative error is below 1e-12 for x >= 8. Requires x >= 3.
AiryPair airy_asymptotic(double x);

struct TWOptions {
  double s_min = -10.0;
  double s_max = 8.0;
  double grid_step = 0.005;
  double tolerance = 1e-10;  // relative local error of the stepper
  // Below this point q is taken from its left asymptotic expansion instead
  // of the ODE, whose error in the Ai direction grows like
  // exp((2 sqrt2 / 3) |s|^{3/2}) and destroys the solution near s = -9.
  double left_switch = -6.0;
};

// The Hastings-McLeod solution q of q'' = s q + 2 q^3, q ~ Ai at +infinity,
// together with J(s) = int_s^inf q^2 and I(s) = int_s^inf (x - s) q^2,
// tabulated on a descending grid from s_max to s_min. F2(s) = exp(-I(s)).
//
// Built by integrating {q, q', I, J} backward from Airy data at s_max with a
// Dormand-Prince 5(4) stepper; I' = -J and J' = -q^2 make the cdf a
// by-product of the ODE solve. Below left_switch the stepper keeps
// integrating I and J but q follows
//   q(s) = sqrt(-s/2) (1 + 1/(8 s^3) - 73/(128 s^6) + 10657/(1024 s^9)).
class TWSolution {
 public:
  static TWSolution solve(const TWOptions& options = {});

  const TWOptions& options() const { return options_; }
  double tolerance() const { return options_.tolerance; }

  // Descending grid s_max = grid[0] > ... > grid.back() = s_min.
  std::span<const double> grid() const { return s_; }
  std::span<const double> q() const { return q_; }
  std::span<const double> f2() const { return f2_; }

  // F2(s): monotone cubic Hermite interpolation of I on the grid. Beyond
  // s_max the Airy tail I(s) is used; below s_min the left-tail asymptotic
  // log F2 ~ -|s|^3/12 - (1/8) log|s| is matched to the grid value at s_min.
  double cdf(double s) const;
  // F2'(s) = F2(s) J(s).
  double pdf(double s) const;

  // Columns s, q, F2 in grid order.
  void write_csv(std::ostream& out) const;

 private:
  TWOptions options_;
  std::vector<double> s_;
  std::vector<double> q_;
  std::vector<double> dq_;
  std::vector<double> i_;
  std::vector<double> j_;
  std::vector<double> f2_;

  double integral_at(double s) const;
  double tail_integral_at(double s) const;
};

// Process-wide default solution, built on first use.
const TWSolution& tracy_widom_solution();

double tracy_widom_f2(double s);

}  // namespace partlaw
