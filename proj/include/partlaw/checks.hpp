#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partlaw {

// Exact-oracle self checks behind `partlaw check --suite NAME`.
// Each prints one line per check and returns true when all pass.
//   identities  eigenvalue forms, a(kappa) by rows and columns, conjugation
//   pmf         normalization of every measure on small n, sum dim^2 = n!
//   counts      count table vs pentagonal recurrence and enumeration, rank/unrank
//   profiles    slopes, area 2, the exact sum i k_i identity
std::vector<std::string> check_suite_names();
bool run_check_suite(const std::string& name, std::ostream& out);

}  // namespace partlaw
