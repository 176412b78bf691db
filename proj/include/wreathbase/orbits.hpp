#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wreathbase/gf.hpp"
#include "wreathbase/linalg.hpp"
#include "wreathbase/nat.hpp"

namespace wb::orbits {

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/// Orbits of GL_d(q) on spanning m-tuples of F_q^d, counted as the number
/// of distinct column spaces of the rank-d m x d matrices whose rows are the
/// tuple entries. `position_order`, when given, is a permutation of [m]
/// applied to tuple positions during enumeration (the count must not
/// depend on it). Throws BudgetExceeded if q^{dm} > budget.
Nat count_spanning_orbits_canonical(unsigned d, std::uint64_t q, unsigned m,
                                    std::uint64_t budget = kDefaultTupleBudget,
                                    std::span<const unsigned> position_order = {});

/// The same count, from the explicit orbit partition: every spanning tuple
/// is merged with its images under all of GL_d(q) in a union-find structure.
/// Spanning is decided by span closure, not by row reduction.
Nat count_spanning_orbits_partition(unsigned d, std::uint64_t q, unsigned m,
                                    std::uint64_t budget = kDefaultTupleBudget,
                                    std::uint64_t gl_cap = linalg::kDefaultGLCap);

/// A group given by its full action table on points 0..n-1:
/// image(h, x) = table[h * n + x]. Elements must be distinct as
/// permutations, and one of them must be the identity.
class ExplicitAction {
public:
  ExplicitAction(std::size_t num_points, std::vector<std::uint32_t> table);

  /// GL_d(q) acting on row vectors of F_q^d (vector code = base-q digits,
  /// coordinate 0 least significant).
  static ExplicitAction gl_on_vectors(unsigned d, gf::FiniteField field,
                                      std::uint64_t cap = linalg::kDefaultGLCap);
  static ExplicitAction trivial(std::size_t num_points);

  std::size_t num_points() const { return points_; }
  std::size_t num_elements() const { return points_ == 0 ? 0 : table_.size() / points_; }
  std::uint32_t image(std::size_t h, std::uint32_t x) const { return table_[h * points_ + x]; }

private:
  std::size_t points_;
  std::vector<std::uint32_t> table_;
};

/// Orbits of H on ordered multi-bases of length m: m-tuples of points whose
/// underlying set has trivial pointwise stabilizer. Throws BudgetExceeded if
/// |points|^m > budget.
Nat count_multibase_orbits(const ExplicitAction& h, unsigned m,
                           std::uint64_t budget = kDefaultTupleBudget);

} // namespace wb::orbits
