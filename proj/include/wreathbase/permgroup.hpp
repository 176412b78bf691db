#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wreathbase/nat.hpp"

namespace wb::perm {

/// Permutation of {0, ..., n-1}; images[i] is the image of i.
class Perm {
public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles given as 0-indexed points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Apply *this first, then `next` (right action: i^(gh) = (i^g)^h).
  Perm then(const Perm& next) const;

  /// Cycle notation, 1-indexed, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<std::uint32_t> images_;
};

inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/// Permutation group given by generators, with its full element list
/// computed by breadth-first closure. Element 0 is always the identity and
/// the element order is a deterministic function of the generator list.
class PermGroup {
public:
  /// Throws BudgetExceeded if the group order exceeds `cap`, and
  /// std::invalid_argument if a generator has the wrong degree.
  static PermGroup from_generators(std::size_t degree, std::vector<Perm> generators,
                                   std::uint64_t cap = kDefaultGroupCap);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order() const { return degree_ == 0 ? 1 : flat_.size() / degree_; }
  Nat order_nat() const { return Nat(order()); }

  /// Images of element `index` as a view into the element store.
  std::span<const std::uint16_t> element(std::size_t index) const
  {
    return {flat_.data() + index * degree_, degree_};
  }
  Perm element_perm(std::size_t index) const;

  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& g) const;

  /// Orbits on points, each sorted, ordered by smallest point.
  std::vector<std::vector<std::uint32_t>> orbits() const;
  std::size_t stabilizer_order(std::uint32_t point) const;

  bool is_transitive() const;
  /// Transitive with no nontrivial block system.
  bool is_primitive() const;
  /// Every point stabilizer is trivial.
  bool is_semiregular() const;
  /// True when the group contains the alternating group of its degree.
  bool contains_alternating() const;

  /// Smallest block containing 0 and `beta` for the block system generated
  /// by identifying them.
  std::vector<std::uint32_t> minimal_block(std::uint32_t beta) const;

private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<std::uint16_t> flat_;
};

struct Predicates {
  bool is_transitive = false;
  bool is_primitive = false;
  bool is_semiregular = false;
};

Predicates predicates(const PermGroup& g);

// Standard constructions.
PermGroup symmetric(std::size_t n, std::uint64_t cap = kDefaultGroupCap);
PermGroup alternating(std::size_t n, std::uint64_t cap = kDefaultGroupCap);
PermGroup cyclic(std::size_t n, std::uint64_t cap = kDefaultGroupCap);
PermGroup dihedral(std::size_t n, std::uint64_t cap = kDefaultGroupCap);
/// AGL(1, p) on the p points of GF(p), p prime.
PermGroup affine_line(std::size_t p, std::uint64_t cap = kDefaultGroupCap);
/// PSL(2, 5) acting on the 6 points of the projective line over GF(5).
PermGroup psl2_5();
/// S_m wr S_r on [m] x [r], point (i, j) stored as j*m + i, with blocks
/// {j*m, ..., j*m + m - 1}.
PermGroup wreath_imprimitive(std::size_t m, std::size_t r, std::uint64_t cap = kDefaultGroupCap);

} // namespace wb::perm
