// Acceptance suite: one PASS/FAIL line per criterion, full grids.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "wreathbase/verify.hpp"

using namespace wb::verify;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from_checks(std::initializer_list<CheckResult> checks)
{
  Outcome out{true, ""};
  for (const auto& c : checks) {
    if (!c.passed)
      out.passed = false;
    for (const auto& f : c.failures)
      out.detail += "\n    " + c.id + ": " + f;
  }
  return out;
}

} // namespace

int main()
{
  Options full;
  full.grid = Grid::Full;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Gaussian binomial = subspace count = spanning orbits (canonical, partition)",
       [&] { return from_checks({check_orbit_counts(full)}); }},
      {"closed-form base size = brute force on GL_d(q) wr L",
       [&] { return from_checks({check_base_size_brute(full)}); }},
      {"(1,2) discrepancy flagged, multi-base criterion consistent",
       [&] {
         auto one_two = check_one_two_discrepancy(full);
         auto out = from_checks({one_two, check_bailey_cameron(full), check_multibase_orbits(full)});
         if (one_two.flagged.empty()) {
           out.passed = false;
           out.detail += "\n    no flagged (1,2) discrepancy";
         }
         return out;
       }},
      {"log-form gap c in {-1, 0}", [&] { return from_checks({check_log_form_gap(full)}); }},
      {"q^{ds} <= Gaussian binomial <= q^{ds} / c(q)", [&] { return from_checks({check_qbinom_bounds(full)}); }},
      {"distinguishing numbers of S_l, A_l and S_m wr S_r", [&] { return from_checks({check_distinguishing(full)}); }},
      {"d(L) <= 4 on the primitive catalog", [&] { return from_checks({check_primitive_catalog(full)}); }},
      {"certificates with family constants, k^k <= (k!)^2", [&] { return from_checks({check_pyber(full)}); }},
      {"verify --grid small --seed 0 is byte-identical across runs",
       [&] {
         Options small;
         const auto a = verify_report(small).json_text();
         const auto b = verify_report(small).json_text();
         return Outcome{a == b, a == b ? "" : "\n    JSON differs"};
       }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("\n    exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs)%s\n", out.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, out.detail.c_str());
    if (!out.passed)
      ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
