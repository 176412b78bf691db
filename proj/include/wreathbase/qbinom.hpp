#pragma once

#include <cstdint>

#include "wreathbase/nat.hpp"

namespace wb::qbinom {

/// Gaussian binomial [m choose d]_q; 0 when d > m. Throws
/// std::invalid_argument unless q is a prime power.
Nat gaussian_binomial(unsigned m, unsigned d, std::uint64_t q);

inline constexpr std::uint64_t kDefaultProfileBudget = 10'000'000;

/// Number of d-dimensional subspaces of F_q^m, counted through RREF shapes:
/// every subspace has exactly one RREF basis, and a pivot set
/// p_0 < ... < p_{d-1} leaves sum_i (m - 1 - p_i - (d - 1 - i)) free entries.
/// Does not use the product formula. Throws BudgetExceeded if the number of
/// pivot sets exceeds `budget`.
Nat count_subspaces_oracle(unsigned m, unsigned d, std::uint64_t q,
                           std::uint64_t budget = kDefaultProfileBudget);

/// c(q) = 1 - 1/q - 1/q^2.
Rational c_of_q(std::uint64_t q);

struct BoundsCheck {
  bool lower_ok = false; // q^{ds} <= [d+s choose d]_q
  bool upper_ok = false; // [d+s choose d]_q <= q^{ds} / c(q)
  Rational c_of_q;
  Nat value;
};

BoundsCheck check_qbinom_bounds(unsigned d, unsigned s, std::uint64_t q);

} // namespace wb::qbinom
