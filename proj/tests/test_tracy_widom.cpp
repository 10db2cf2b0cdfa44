#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/airy.hpp>

#include "partlaw/tracy_widom.hpp"
#include "partlaw/types.hpp"

using namespace partlaw;

TEST_CASE("Airy asymptotics against Boost's Airy functions") {
  for (double x : {3.0, 5.0, 8.0, 12.0, 16.0}) {
    const auto [ai, dai] = airy_asymptotic(x);
    const double tol = x >= 8.0 ? 1e-12 : 1e-5;
    CHECK(ai == doctest::Approx(boost::math::airy_ai(x)).epsilon(tol));
    CHECK(dai == doctest::Approx(boost::math::airy_ai_prime(x)).epsilon(tol));
  }
  CHECK_THROWS_AS(airy_asymptotic(1.0), DomainError);
}

TEST_CASE("grid invariants") {
  const TWSolution& tw = tracy_widom_solution();
  const auto s = tw.grid();
  const auto q = tw.q();
  const auto f = tw.f2();
  REQUIRE(s.size() > 1000);
  CHECK(s.front() == 8.0);
  CHECK(s.back() == -10.0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    REQUIRE(s[k] < s[k - 1]);
    REQUIRE(f[k] <= f[k - 1]);  // descending grid
    REQUIRE(q[k] > 0.0);
    if (s[k] > 0.0) REQUIRE(q[k] > q[k - 1]);  // decays for x > 0
  }
  for (double v : f) {
    REQUIRE(v > 0.0);
    REQUIRE(v < 1.0);
  }
  CHECK(tw.cdf(8.0) > 1.0 - 1e-8);
  CHECK(tw.cdf(-10.0) < 1e-6);
  CHECK(tw.tolerance() == 1e-10);
}

TEST_CASE("cdf is monotone off the grid and continuous at the ends") {
  const TWSolution& tw = tracy_widom_solution();
  double prev = 0.0;
  for (int k = 0; k <= 4000; ++k) {
    const double x = -14.0 + 26.0 * k / 4000.0;
    const double f = tw.cdf(x);
    REQUIRE(f >= prev);
    REQUIRE(f <= 1.0);
    prev = f;
  }
  CHECK(tw.cdf(8.0 + 1e-9) == doctest::Approx(tw.cdf(8.0 - 1e-9)).epsilon(1e-12));
  CHECK(tw.cdf(-10.0 - 1e-9) == doctest::Approx(tw.cdf(-10.0 + 1e-9)).epsilon(1e-6));
  CHECK(tw.cdf(-INFINITY) == 0.0);
  CHECK(tw.cdf(INFINITY) == 1.0);
  CHECK(tw.pdf(-20.0) >= 0.0);
}

TEST_CASE("tolerance refinement changes F2 by less than 1e-6") {
  TWOptions fine;
  fine.tolerance = 1e-12;
  const TWSolution tight = TWSolution::solve(fine);
  const TWSolution& base = tracy_widom_solution();
  for (double s : {-4.0, -2.0, 0.0, 2.0}) CHECK(std::abs(base.cdf(s) - tight.cdf(s)) < 1e-6);
}

TEST_CASE("moments of F2") {
  const TWSolution& tw = tracy_widom_solution();
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  const double mass = gk.integrate([&](double s) { return tw.pdf(s); }, -10.0, 8.0, 20, 1e-12);
  const double mean = gk.integrate([&](double s) { return s * tw.pdf(s); }, -10.0, 8.0, 20, 1e-12);
  const double second = gk.integrate([&](double s) { return s * s * tw.pdf(s); }, -10.0, 8.0, 20, 1e-12);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  // Published moments of the GUE Tracy-Widom law.
  CHECK(mean == doctest::Approx(-1.7710868074).epsilon(1e-6));
  CHECK(second - mean * mean == doctest::Approx(0.8131947928).epsilon(1e-5));
  CHECK(tw.cdf(-2.0) == doctest::Approx(0.41322414).epsilon(1e-6));
  CHECK(tw.cdf(0.0) == doctest::Approx(0.96937282).epsilon(1e-6));
}

TEST_CASE("left expansion and options") {
  CHECK(hastings_mcleod_left(-8.0) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK_THROWS_AS(hastings_mcleod_left(-1.0), DomainError);
  TWOptions bad;
  bad.s_max = 2.0;
  CHECK_THROWS_AS(TWSolution::solve(bad), DomainError);
  TWOptions bad_switch;
  bad_switch.left_switch = 0.0;
  CHECK_THROWS_AS(TWSolution::solve(bad_switch), DomainError);
  // With the expansion pushed to the far left, the raw ODE loses the branch.
  TWOptions raw;
  raw.s_min = -12.0;
  raw.left_switch = -12.0;
  CHECK_THROWS_AS(TWSolution::solve(raw), NumericError);
}

TEST_CASE("csv dump") {
  std::ostringstream out;
  tracy_widom_solution().write_csv(out);
  const std::string text = out.str();
  CHECK(text.rfind("s,q,F2\n8,", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == tracy_widom_solution().grid().size() + 1);
  CHECK(tracy_widom_f2(0.0) == tracy_widom_solution().cdf(0.0));
}
