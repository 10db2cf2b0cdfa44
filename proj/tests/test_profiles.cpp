#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "partlaw/limits.hpp"
#include "partlaw/measures.hpp"
#include "partlaw/profiles.hpp"

using namespace partlaw;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Boundary height at integer t straight from the diagram: walk the diagonal
// j - i = t outward and stop at the first lattice corner (i, j) whose cell
// (i + 1, j + 1) is missing.
double brute_lattice_value(const Partition& k, int t) {
  int best = std::abs(t);
  const int m = k.length();
  for (int i = 0; i <= m; ++i) {
    const int j = i + t;
    if (j < 0) continue;
    if (j >= k.part(i + 1)) {
      best = i + j;
      break;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("single box profile") {
  const Profile p = build_profile(P({1}));
  CHECK(p.lattice_corners() == std::vector<LatticePoint>{{-1, 1}, {0, 2}, {1, 1}});
  CHECK(p(0.0) == doctest::Approx(2.0));
  CHECK(p(-1.0) == doctest::Approx(1.0));
  CHECK(p(3.0) == 3.0);
  CHECK(p(-3.0) == 3.0);
  CHECK(scaled_area(p) == doctest::Approx(2.0));
}

TEST_CASE("square and extremal profiles") {
  const Profile square = build_profile(P({2, 2}));
  CHECK(square(0.0) == doctest::Approx(2.0));
  for (double x : {0.3, 0.7, 1.1}) CHECK(square(x) == doctest::Approx(square(-x)));
  const Profile row = build_profile(Partition({5}));
  CHECK(row.lattice_corners() == std::vector<LatticePoint>{{-1, 1}, {4, 6}, {5, 5}});
  CHECK_THROWS_AS(build_profile(Partition{}), DomainError);
  CHECK_THROWS_AS(Profile({{0, 0}, {1, 0}}, 1), DomainError);
}

TEST_CASE("profile matches the diagram boundary at every integer abscissa") {
  for (int n = 1; n <= 12; ++n) {
    for_each_partition(n, 0, n, [&](const Partition& k) {
      const Profile p = build_profile(k);
      for (int t = -k.length() - 2; t <= k.largest() + 2; ++t)
        REQUIRE(p.lattice_value(t) == doctest::Approx(brute_lattice_value(k, t)));
    });
  }
}

TEST_CASE("profile invariants for n <= 15") {
  for (int n = 1; n <= 15; ++n) {
    for_each_partition(n, 0, n, [&](const Partition& k) {
      const Profile p = build_profile(k);
      const auto& c = p.lattice_corners();
      REQUIRE(c.front() == LatticePoint{-k.length(), k.length()});
      REQUIRE(c.back() == LatticePoint{k.largest(), k.largest()});
      for (std::size_t i = 2; i < c.size(); ++i) REQUIRE(((c[i].v > c[i - 1].v) != (c[i - 1].v > c[i - 2].v)));
      REQUIRE(lattice_area(p) == 2 * n);
      REQUIRE(scaled_area(p) == doctest::Approx(2.0));
      const double r = std::sqrt(static_cast<double>(n));
      double prev_x = -4.0;
      double prev_g = p(prev_x);
      for (int s = 1; s <= 200; ++s) {
        const double x = -4.0 + 8.0 * s / 200.0;
        const double g = p(x);
        REQUIRE(std::abs(g - prev_g) <= (x - prev_x) + 1e-12);  // 1-Lipschitz
        if (x < -k.length() / r || x > k.largest() / r) REQUIRE(g == doctest::Approx(std::abs(x)));
        REQUIRE(g >= std::abs(x) - 1e-12);
        prev_x = x;
        prev_g = g;
      }
    });
  }
}

TEST_CASE("sum i k_i identity") {
  for (int n : {1, 5, 17}) {
    const auto [l1, r1] = weighted_sum_identity(Partition({n}));
    CHECK(l1 == n);
    CHECK(l1 == r1);
    const auto [l2, r2] = weighted_sum_identity(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    CHECK(l2 == Rational(n * (n + 1), 2));
    CHECK(l2 == r2);
  }
  int count = 0;
  for_each_partition(12, 0, 12, [&](const Partition& k) {
    const auto [l, r] = weighted_sum_identity(k);
    CHECK(l == r);
    ++count;
  });
  CHECK(count == 77);
  for (int n = 1; n <= 20; ++n) {
    for_each_partition(n, 0, n, [&](const Partition& k) {
      const auto [l, r] = weighted_sum_identity(k);
      REQUIRE(l == r);
    });
  }
}

TEST_CASE("sum i k_i identity on Plancherel samples") {
  for (int i = 0; i < 100; ++i) {
    RngStream rng(77, static_cast<std::uint64_t>(i));
    const Partition k = sample_plancherel(500, rng);
    const auto [l, r] = weighted_sum_identity(k);
    REQUIRE(l == r);
  }
}

TEST_CASE("distance to the Kerov curve") {
  CHECK(sup_distance_to_omega(Partition({100})) > 1.0);
  for (int n = 1; n <= 12; ++n) {
    for_each_partition(n, 0, n, [&](const Partition& k) {
      REQUIRE(sup_distance_to_omega(k) == doctest::Approx(sup_distance_to_omega(conjugate(k))).epsilon(1e-12));
      const Profile p = build_profile(k);
      REQUIRE(p(0.37) == doctest::Approx(build_profile(conjugate(k))(-0.37)));
    });
  }
  std::vector<double> d;
  for (int i = 0; i < 100; ++i) {
    RngStream rng(88, static_cast<std::uint64_t>(i));
    d.push_back(sup_distance_to_omega(sample_plancherel(5000, rng)));
  }
  std::nth_element(d.begin(), d.begin() + 50, d.end());
  CHECK(d[50] < 0.15);
}

TEST_CASE("corner csv") {
  std::ostringstream out;
  write_profile_csv(build_profile(P({2, 1, 1})), out);
  const std::string text = out.str();
  CHECK(text.rfind("u,v\n", 0) == 0);
  // Corners (-3,3) (-2,4) (0,2) (1,3) (2,2), scaled by 1/2.
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find("-1.5,1.5\n") != std::string::npos);
  CHECK(text.find("1,1\n") != std::string::npos);
}
