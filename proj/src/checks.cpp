#include "partlaw/checks.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "partlaw/measures.hpp"
#include "partlaw/profiles.hpp"
#include "partlaw/spectra.hpp"

namespace partlaw {

namespace {

struct Reporter {
  std::ostream& out;
  bool all = true;

  void operator()(const std::string& name, bool ok, const std::string& detail = {}) {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << '\n';
    all = all && ok;
  }
};

void identities(Reporter& report) {
  const Rational alphas[] = {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)};
  bool forms = true;
  bool weights = true;
  bool involution = true;
  std::size_t seen = 0;
  for (int n = 1; n <= 22; ++n) {
    for_each_partition(n, 0, n, [&](const Partition& kappa) {
      ++seen;
      for (const auto& a : alphas) forms = forms && eigenvalue_by_weights(kappa, a) == eigenvalue_by_rows(kappa, a);
      weights = weights && weight_a(kappa) == weight_a_by_columns(kappa);
      involution = involution && conjugate(conjugate(kappa)) == kappa;
    });
  }
  const std::string detail = std::to_string(seen) + " partitions, n <= 22";
  report("eigenvalue forms agree exactly", forms, detail);
  report("a(kappa) by rows equals a(kappa) by columns", weights, detail);
  report("conjugation is an involution", involution, detail);
}

void pmf(Reporter& report) {
  double worst = 0.0;
  auto total = [&](const MeasureSpec& spec) {
    double s = 0.0;
    for_each_partition(spec.n, 0, spec.n, [&](const Partition& kappa) {
      if (spec.supports(kappa)) s += std::exp(log_pmf(spec, kappa));
    });
    worst = std::max(worst, std::abs(s - 1.0));
  };
  for (int n = 1; n <= 8; ++n) {
    total(MeasureSpec::uniform(n));
    total(MeasureSpec::plancherel(n));
    for (int m = 1; m <= std::min(n, 4); ++m) {
      total(MeasureSpec::restricted_uniform(n, m, false));
      total(MeasureSpec::restricted_uniform(n, m, true));
      for (double a : {0.5, 1.0, 2.0}) {
        total(MeasureSpec::restricted_jack(n, m, a, false));
        total(MeasureSpec::restricted_jack(n, m, a, true));
      }
    }
  }
  report("every measure sums to one on n <= 8", worst < 1e-9, "max error " + std::to_string(worst));

  bool jack = true;
  for (double a : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 8; ++n) {
      double s = 0.0;
      for_each_partition(n, 0, n, [&](const Partition& kappa) { s += std::exp(jack_log_pmf(kappa, a)); });
      jack = jack && std::abs(s - 1.0) < 1e-9;
    }
  }
  report("alpha-Jack masses sum to one on n <= 8", jack);

  bool dims = true;
  for (int n = 1; n <= 8; ++n) {
    BigInt s = 0;
    for_each_partition(n, 0, n, [&](const Partition& kappa) {
      const BigInt d = dimension(kappa);
      s += d * d;
    });
    dims = dims && s == factorial(n);
  }
  report("sum of dim^2 equals n! for n <= 8", dims);
}

void counts(Reporter& report) {
  constexpr int kMax = 120;
  const CountTable table(kMax, kMax);
  const auto p = partition_counts(kMax);
  bool pentagonal = true;
  for (int n = 0; n <= kMax; ++n) pentagonal = pentagonal && table.at_most(n, n) == p[static_cast<std::size_t>(n)];
  report("|P_n(n)| matches the pentagonal recurrence for n <= 120", pentagonal);

  bool recurrence = true;
  for (int n = 1; n <= kMax; ++n)
    for (int m = 1; m <= kMax; ++m)
      recurrence = recurrence && table.exactly(n, m) == (table.exactly(n - 1, m - 1) + (n >= m ? table.exactly(n - m, m) : BigInt(0)));
  report("exact-length counts satisfy p'(n,m) = p'(n-1,m-1) + p'(n-m,m)", recurrence);

  bool enumerated = true;
  for (int n = 0; n <= 25; ++n)
    for (int m = 0; m <= n; ++m)
      enumerated = enumerated && BigInt(enumerate(n, 0, m).size()) == table.at_most(n, m);
  report("counts match full enumeration for n <= 25", enumerated);

  bool round_trip = true;
  for (int n = 1; n <= 16; ++n) {
    for (int m = 1; m <= n; ++m) {
      const auto all = enumerate(n, 0, m);
      for (std::size_t i = 0; i < all.size(); ++i) {
        const Partition kappa = unrank(n, m, BigInt(i), table);
        round_trip = round_trip && kappa == all[i] && rank(kappa, m, table) == BigInt(i);
      }
    }
  }
  report("unrank follows enumeration order and inverts rank for n <= 16", round_trip);
}

void profiles(Reporter& report) {
  bool shape = true;
  bool area = true;
  bool identity = true;
  for (int n = 1; n <= 18; ++n) {
    for_each_partition(n, 0, n, [&](const Partition& kappa) {
      const Profile prof = build_profile(kappa);
      const auto& c = prof.lattice_corners();
      shape = shape && c.front() == LatticePoint{-kappa.length(), kappa.length()} &&
              c.back() == LatticePoint{kappa.largest(), kappa.largest()};
      for (std::size_t k = 2; k < c.size(); ++k) {
        const bool up0 = c[k - 1].v > c[k - 2].v;
        const bool up1 = c[k].v > c[k - 1].v;
        shape = shape && up0 != up1;
      }
      area = area && lattice_area(prof) == 2 * static_cast<std::int64_t>(n);
      const auto [lhs, rhs] = weighted_sum_identity(kappa);
      identity = identity && lhs == rhs;
    });
  }
  report("profiles alternate slopes and span (-m, m) to (k_1, k_1), n <= 18", shape);
  report("area between profile and |x| is 2, n <= 18", area);
  report("sum i k_i identity holds exactly, n <= 18", identity);
}

}  // namespace

std::vector<std::string> check_suite_names() { return {"identities", "pmf", "counts", "profiles"}; }

bool run_check_suite(const std::string& name, std::ostream& out) {
  Reporter report{out};
  if (name == "identities")
    identities(report);
  else if (name == "pmf")
    pmf(report);
  else if (name == "counts")
    counts(report);
  else if (name == "profiles")
    profiles(report);
  else
    throw ConfigError("unknown check suite '" + name + "'");
  return report.all;
}

}  // namespace partlaw
