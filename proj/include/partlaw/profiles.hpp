#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "partlaw/partition.hpp"

namespace partlaw {

// Integer point of the rotated diagram: u = j - i, v = i + j for a corner
// (i, j) of the Young diagram drawn with row i and column j.
struct LatticePoint {
  int u = 0;
  int v = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// The boundary of a Young diagram rotated by 135 degrees (Russian
// convention). In lattice units the boundary G(t) runs from (-m, m) to
// (k_1, k_1) with slopes +-1 and equals |t| outside that interval; the
// profile of the theorems is g(x) = G(x sqrt(n)) / sqrt(n).
class Profile {
 public:
  Profile(std::vector<LatticePoint> corners, int n);

  int n() const { return n_; }
  // Turning points only, plus the two endpoints, left to right.
  const std::vector<LatticePoint>& lattice_corners() const { return corners_; }
  // The same points scaled by 1/sqrt(n).
  std::vector<std::pair<double, double>> corners() const;

  // G at a lattice abscissa (any real t).
  double lattice_value(double t) const;
  // g(x) = G(x sqrt(n)) / sqrt(n).
  double operator()(double x) const;

 private:
  std::vector<LatticePoint> corners_;
  int n_;
};

Profile build_profile(const Partition& kappa);

// Exact area between G and |t| in lattice units; always 2n.
std::int64_t lattice_area(const Profile& profile);
// Area between g and |x|; always 2.
double scaled_area(const Profile& profile);

// lhs = sum_i i k_i and rhs = (1/8) int_{-m}^{k_1} (G(t) - t)^2 dt - m^3/6 + n/2.
// With x = t / sqrt(n) the right side is the scaled identity
// (1/8) n^{3/2} int (g(x) - x)^2 dx - m^3/6 + n/2, but here every quantity is
// rational: G is piecewise linear with integer corners.
std::pair<Rational, Rational> weighted_sum_identity(const Partition& kappa);

// sup_x |g(x) - Omega(x)| over the corners, x = +-2 and a 1001-point grid on [-3, 3].
double sup_distance_to_omega(const Partition& kappa);
double sup_distance_to_omega(const Profile& profile);

// Columns u, v of the scaled corners.
void write_profile_csv(const Profile& profile, std::ostream& out);

}  // namespace partlaw
