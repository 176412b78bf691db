#pragma once

#include <cstdint>

#include "wreathbase/distinguishing.hpp"
#include "wreathbase/nat.hpp"
#include "wreathbase/orbits.hpp"
#include "wreathbase/permgroup.hpp"

namespace wb::basesize {

/// GL_d(q) wr L acting on V_d(q)^l in product action, l = L.degree().
struct WreathSpec {
  unsigned d = 1;
  std::uint64_t q = 2;
  perm::PermGroup group;

  std::size_t blocks() const { return group.degree(); }
};

/// d + min{ s >= 0 : [d+s choose d]_q >= dL }.
unsigned base_size_closed_form(unsigned d, std::uint64_t q, unsigned dL);

/// Smallest t >= 0 with q^{dt} >= dL, i.e. ceil(log dL / (d log q)).
unsigned ceil_log_ratio(unsigned d, std::uint64_t q, unsigned dL);

struct LogForm {
  unsigned b = 0;
  unsigned ceil_term = 0;
  int c = 0; // b - d - ceil_term, always -1 or 0
};

/// Closed form split as d + ceil(log dL / (d log q)) + c. Throws
/// InvariantViolation if c falls outside {-1, 0}.
LogForm base_size_log_form(unsigned d, std::uint64_t q, unsigned dL);

struct BruteOptions {
  std::uint64_t max_group_order = 1'000'000;
  std::uint64_t max_points = 1'000'000;
};

/// Minimal base size of an explicitly tabulated action.
unsigned minimal_base_size(const orbits::ExplicitAction& action);

/// Minimal base size of GL_d(q) wr L on V_d(q)^l by exhaustive search:
/// iterative deepening on the base size, first point restricted to orbit
/// representatives, stabilizers obtained by filtering the element list.
/// Throws BudgetExceeded when the group order or point count is over cap.
unsigned base_size_brute_force(const WreathSpec& spec, const BruteOptions& opts = {});

struct BaileyCameron {
  unsigned m = 0;
  Nat multibase_orbits;     // orbits of GL_d(q) on ordered multi-bases of length m
  unsigned dL = 0;
  bool criterion = false;   // multibase_orbits >= dL
  unsigned brute_b = 0;
  bool brute_has_base = false; // brute_b <= m
  bool consistent() const { return criterion == brute_has_base; }
};

/// Evaluates both sides of the multi-base criterion for a base of size m.
/// Throws std::runtime_error if d(L) is not determined exactly.
BaileyCameron bailey_cameron_check(const WreathSpec& spec, unsigned m, const BruteOptions& opts = {},
                                   const dist::SearchOptions& search = {});

struct SmallDLBound {
  unsigned b = 0;
  bool holds = false;          // b <= d + 1
  bool excluded_point = false; // (d, q) = (1, 2), outside the irreducible case
};

/// For dL <= 4: the closed-form base size is at most d + 1, except at
/// (d, q) = (1, 2), which is reported rather than asserted. Throws
/// std::invalid_argument for dL outside [1, 4].
SmallDLBound small_dl_bound(unsigned d, std::uint64_t q, unsigned dL);

} // namespace wb::basesize
