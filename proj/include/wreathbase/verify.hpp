#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathbase/report.hpp"

namespace wb::verify {

enum class Grid { Small, Full };

Grid parse_grid(const std::string& name);

struct Options {
  Grid grid = Grid::Small;
  std::uint64_t seed = 0;
  std::uint64_t max_group_order = 1'000'000;
  std::uint64_t max_tuples = 10'000'000;
};

/// One verified claim. `flagged` lists known discrepancies that are
/// reported but do not fail the check.
struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<std::string> flagged;
  report::Json data = report::Json::object();
};

// Gaussian binomial = RREF-shape count = canonical orbit count = partition orbit count.
CheckResult check_orbit_counts(const Options& opts);
// Multi-base orbits of GL_d(q) equal spanning-tuple orbits away from (d, q) = (1, 2).
CheckResult check_multibase_orbits(const Options& opts);
// Closed-form base size equals brute force on GL_d(q) wr L.
CheckResult check_base_size_brute(const Options& opts);
// Multi-base criterion agrees with brute force in both directions, (1, 2) included.
CheckResult check_bailey_cameron(const Options& opts);
// The (d, q) = (1, 2) closed-form/brute-force disagreement is present and flagged.
CheckResult check_one_two_discrepancy(const Options& opts);
// c in {-1, 0} for the log form.
CheckResult check_log_form_gap(const Options& opts);
// q^{ds} <= [d+s choose d]_q <= q^{ds} / c(q).
CheckResult check_qbinom_bounds(const Options& opts);
// d(S_l) = l, d(A_l) = l - 1, and the S_m wr S_r formula and bound.
CheckResult check_distinguishing(const Options& opts);
// d(L) <= 4 on the small primitive catalog.
CheckResult check_primitive_catalog(const Options& opts);
// Certificates with the family constants, and the factorial inequalities.
CheckResult check_pyber(const Options& opts);

std::vector<CheckResult> run_all(const Options& opts);

report::Json to_json(const CheckResult& r);

/// Report for `verify`: one entry per check; flagged items go to the
/// report's discrepancy list.
report::Report verify_report(const Options& opts);

/// True iff every check passed (flagged discrepancies do not count).
bool all_passed(const std::vector<CheckResult>& results);

} // namespace wb::verify
