#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wreathbase/permgroup.hpp"
#include "wreathbase/pyber.hpp"
#include "wreathbase/report.hpp"
#include "wreathbase/verify.hpp"

namespace wb::cmd {

struct Budgets {
  std::uint64_t max_group_order = 1'000'000;
  std::uint64_t max_tuples = 10'000'000;
  std::uint64_t seed = 0;
};

/// Exactly one of the two must be set.
struct GroupSource {
  std::string builtin;
  std::string generators_path;
};

/// Throws std::invalid_argument on a bad source or unreadable file.
perm::PermGroup load_group(const GroupSource& src, std::uint64_t cap);

/// `ok` is false when a non-flagged check failed; the CLI maps that to a
/// nonzero exit status.
struct Outcome {
  report::Report report;
  bool ok = true;
};

Outcome cmd_qbinom(unsigned m, unsigned d, std::uint64_t q, bool oracle, const Budgets& budgets);

Outcome cmd_distnum(const GroupSource& src, const Budgets& budgets);

Outcome cmd_basesize(unsigned d, std::uint64_t q, const GroupSource& src, bool brute, const Budgets& budgets);

/// Spanning-tuple orbits (both methods) against the Gaussian binomial, plus
/// multi-base orbits of GL_d(q) on V_d(q).
Outcome cmd_orbits(unsigned d, std::uint64_t q, unsigned m, const Budgets& budgets);

struct PyberChoice {
  std::optional<std::string> family;  // small_dL | primitive | semiregular | wreath
  pyber::FamilyParams params;
  std::optional<std::string> constant; // explicit C as a rational, e.g. "2" or "5/2"
};

Outcome cmd_pyber(unsigned d, std::uint64_t q, const GroupSource& src, const PyberChoice& choice,
                  const Budgets& budgets);

Outcome cmd_verify(const verify::Options& opts);

} // namespace wb::cmd
