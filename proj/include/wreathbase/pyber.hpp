#pragma once

#include <optional>
#include <string>

#include "wreathbase/basesize.hpp"
#include "wreathbase/distinguishing.hpp"
#include "wreathbase/logcmp.hpp"
#include "wreathbase/nat.hpp"

namespace wb::pyber {

using logcmp::LogRatio;

/// Smallest constant C > 1 with
///     log dL <= (C / l) log |L| + (C - 1) log 2,
/// which is log((2 dL)^l) / log(|L| 2^l). When that ratio is <= 1 every
/// C > 1 works and `any_above_one` is set.
struct MinimalC {
  bool any_above_one = false;
  LogRatio value;
};

MinimalC minimal_pyber_C(unsigned ell, const Nat& order_L, unsigned dL);

/// The hypothesis inequality for a given C > 1. Throws
/// std::invalid_argument if C <= 1.
bool hypothesis_holds(unsigned ell, const Nat& order_L, unsigned dL, const LogRatio& C);

enum class Family { SmallDL, Primitive, Semiregular, Wreath };

struct FamilyParams {
  unsigned c = 0;          // SmallDL: bound on d(L)
  bool alt_or_sym = false; // Primitive: L is A_l or S_l
  unsigned m = 0, r = 0;   // Wreath: S_m wr S_r, m, r >= 2
};

struct FamilyConstant {
  LogRatio general;
  std::optional<LogRatio> refined; // C = 2 for primitive A_l / S_l
};

FamilyConstant family_constant(Family family, const FamilyParams& params);

Family parse_family(const std::string& name);
std::string family_name(Family family);

/// The certification chain for G = V : X0 with X0 = GL_d(q) wr L:
/// hypothesis on d(L), then b(X0) + 1 <= C log|G| / log n + C + 2 with
/// n = q^{dl} and |G| = n |X0|. The conclusion is only evaluated when the
/// hypothesis holds.
struct PyberCertificate {
  unsigned d = 0;
  std::uint64_t q = 0;
  std::size_t ell = 0;
  unsigned dL = 0;
  unsigned b = 0;
  LogRatio C{2, 2};
  Nat order_L;
  Nat order_X0;
  Nat n;
  Nat order_G;
  unsigned lhs = 0;        // b + 1
  double rhs_approx = 0.0; // C log|G| / log n + C + 2
  bool hypothesis_ok = false;
  bool conclusion_tested = false;
  bool conclusion_ok = false;
};

/// Throws std::invalid_argument if C <= 1 and std::runtime_error if d(L)
/// cannot be determined exactly.
PyberCertificate certify(const basesize::WreathSpec& spec, const LogRatio& C,
                         const dist::SearchOptions& search = {});

/// k^k <= (k!)^2 for all 1 <= k <= kmax.
bool kk_factorial_check(unsigned kmax);

/// d(L)^l <= |L|^2 for L = S_l (d = l) and L = A_l (d = l - 1).
bool sym_alt_power_check(unsigned ell);

/// (m r^{1/m})^{mr} <= (m!^r r!)^2, i.e. m^{mr} r^r <= (m!^r r!)^2.
bool wreath_power_check(unsigned m, unsigned r);

} // namespace wb::pyber
