#include "partlaw/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "partlaw/limits.hpp"

namespace partlaw {

Profile::Profile(std::vector<LatticePoint> corners, int n) : corners_(std::move(corners)), n_(n) {
  if (corners_.size() < 2) throw DomainError("Profile: need at least two corners");
  if (n_ < 1) throw DomainError("Profile: n must be positive");
  for (std::size_t k = 1; k < corners_.size(); ++k) {
    const int du = corners_[k].u - corners_[k - 1].u;
    const int dv = corners_[k].v - corners_[k - 1].v;
    if (du <= 0 || std::abs(dv) != du) throw DomainError("Profile: segments must have slope +-1");
  }
}

std::vector<std::pair<double, double>> Profile::corners() const {
  const double r = std::sqrt(static_cast<double>(n_));
  std::vector<std::pair<double, double>> out;
  out.reserve(corners_.size());
  for (const auto& c : corners_) out.emplace_back(c.u / r, c.v / r);
  return out;
}

double Profile::lattice_value(double t) const {
  if (t <= corners_.front().u || t >= corners_.back().u) return std::abs(t);
  const auto it = std::upper_bound(corners_.begin(), corners_.end(), t,
                                   [](double x, const LatticePoint& c) { return x < c.u; });
  const LatticePoint& b = *it;
  const LatticePoint& a = *(it - 1);
  const double slope = static_cast<double>(b.v - a.v) / (b.u - a.u);
  return a.v + slope * (t - a.u);
}

double Profile::operator()(double x) const {
  const double r = std::sqrt(static_cast<double>(n_));
  return lattice_value(x * r) / r;
}

Profile build_profile(const Partition& kappa) {
  if (kappa.empty()) throw DomainError("build_profile: partition must be nonempty");
  const int m = kappa.length();
  // Walk the boundary from (row m, column 0) to (row 0, column k_1): along
  // row i go right to column k_i (slope +1), then up one row (slope -1).
  std::vector<LatticePoint> corners{{-m, m}};
  int i = m;
  int j = 0;
  auto push = [&] { corners.push_back({j - i, i + j}); };
  while (i > 0) {
    const int target = kappa.part(i);
    if (target > j) {
      j = target;
      push();
    }
    // Go up through all rows of the same length in one segment.
    while (i > 0 && kappa.part(i) == j) --i;
    push();
  }
  return Profile(std::move(corners), kappa.n());
}

std::int64_t lattice_area(const Profile& profile) {
  // Twice the area is an integer: each linear piece contributes L (a + b) / 2.
  std::int64_t twice = 0;
  const auto& c = profile.lattice_corners();
  for (std::size_t k = 1; k < c.size(); ++k) {
    const LatticePoint a = c[k - 1];
    const LatticePoint b = c[k];
    auto piece = [&](int u0, int v0, int u1, int v1) {
      const std::int64_t f0 = v0 - std::abs(u0);
      const std::int64_t f1 = v1 - std::abs(u1);
      twice += static_cast<std::int64_t>(u1 - u0) * (f0 + f1);
    };
    if (a.u < 0 && b.u > 0) {
      const int v0 = a.v + (b.v - a.v) / (b.u - a.u) * (0 - a.u);
      piece(a.u, a.v, 0, v0);
      piece(0, v0, b.u, b.v);
    } else {
      piece(a.u, a.v, b.u, b.v);
    }
  }
  return twice / 2;
}

double scaled_area(const Profile& profile) {
  return static_cast<double>(lattice_area(profile)) / static_cast<double>(profile.n());
}

std::pair<Rational, Rational> weighted_sum_identity(const Partition& kappa) {
  const Profile profile = build_profile(kappa);
  const auto& c = profile.lattice_corners();
  // On a piece of length L where G - t runs linearly from a to b,
  // int (G - t)^2 = L (a^2 + a b + b^2) / 3.
  BigInt thrice = 0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    const BigInt len = c[k].u - c[k - 1].u;
    const BigInt a = c[k - 1].v - c[k - 1].u;
    const BigInt b = c[k].v - c[k].u;
    thrice += len * (a * a + a * b + b * b);
  }
  const BigInt m = kappa.length();
  const Rational rhs = Rational(thrice, 24) - Rational(m * m * m, 6) + Rational(kappa.n(), 2);
  return {Rational(weighted_index_sum(kappa)), rhs};
}

double sup_distance_to_omega(const Profile& profile) {
  double sup = 0.0;
  auto probe = [&](double x) { sup = std::max(sup, std::abs(profile(x) - kerov_omega(x))); };
  for (const auto& [u, v] : profile.corners()) sup = std::max(sup, std::abs(v - kerov_omega(u)));
  probe(-2.0);
  probe(2.0);
  constexpr int kGrid = 1000;
  for (int k = 0; k <= kGrid; ++k) probe(-3.0 + 6.0 * k / kGrid);
  return sup;
}

double sup_distance_to_omega(const Partition& kappa) { return sup_distance_to_omega(build_profile(kappa)); }

void write_profile_csv(const Profile& profile, std::ostream& out) {
  out << "u,v\n" << std::setprecision(17);
  for (const auto& [u, v] : profile.corners()) out << u << ',' << v << '\n';
}

}  // namespace partlaw
