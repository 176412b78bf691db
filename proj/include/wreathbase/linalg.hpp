#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wreathbase/gf.hpp"
#include "wreathbase/nat.hpp"

namespace wb::linalg {

using gf::FieldElem;
using gf::FiniteField;

/// Dense row-major matrix over a finite field. Entries are stored as field
/// codes so every entry belongs to `field()` by construction.
class MatGF {
public:
  MatGF(FiniteField field, std::size_t rows, std::size_t cols);
  MatGF(FiniteField field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> codes);

  static MatGF identity(FiniteField field, std::size_t n);

  FiniteField field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem at(std::size_t r, std::size_t c) const { return field_.element(code(r, c)); }
  void set(std::size_t r, std::size_t c, const FieldElem& v);

  std::uint32_t code(std::size_t r, std::size_t c) const { return codes_[r * cols_ + c]; }
  std::uint32_t& code(std::size_t r, std::size_t c) { return codes_[r * cols_ + c]; }
  const std::vector<std::uint32_t>& codes() const { return codes_; }

  MatGF transpose() const;

  friend MatGF operator*(const MatGF& a, const MatGF& b);
  friend bool operator==(const MatGF& a, const MatGF& b) = default;

private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> codes_;
};

struct RrefResult {
  MatGF reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const MatGF& a);

std::size_t rank(const MatGF& a);

/// Canonical form of a subspace of F_q^m: its RREF basis (rows) and pivots.
/// Two values compare equal exactly when they describe the same subspace.
struct SubspaceCanon {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  std::vector<std::uint32_t> basis; // dim x ambient_dim, row-major codes
  std::vector<std::size_t> pivots;

  friend bool operator==(const SubspaceCanon&, const SubspaceCanon&) = default;
  friend auto operator<=>(const SubspaceCanon&, const SubspaceCanon&) = default;
};

struct SubspaceCanonHash {
  std::size_t operator()(const SubspaceCanon& s) const noexcept;
};

/// Column space of an m x d matrix as a subspace of F_q^m. Invariant under
/// A -> A g for invertible g.
SubspaceCanon column_space_canon(const MatGF& a);

inline constexpr std::uint64_t kDefaultGLCap = 1'000'000;

/// Calls `visit` once for each invertible d x d matrix over `field`, in
/// lexicographic order of row codes. Rows are chosen outside the span of the
/// rows already placed. Throws BudgetExceeded if |GL_d(q)| > cap.
void enumerate_gl(std::size_t d, FiniteField field, const std::function<void(const MatGF&)>& visit,
                  std::uint64_t cap = kDefaultGLCap);

std::vector<MatGF> all_gl(std::size_t d, FiniteField field, std::uint64_t cap = kDefaultGLCap);

/// |GL_d(q)| = prod_{i=0}^{d-1} (q^d - q^i).
Nat gl_order(unsigned d, std::uint64_t q);
/// |SL_d(q)| = |GL_d(q)| / (q - 1).
Nat sl_order(unsigned d, std::uint64_t q);
/// a(d, q) = prod_{i=1}^{d} (1 - q^{-i}), so that |GL_d(q)| = q^{d^2} a(d, q).
Rational a_factor(unsigned d, std::uint64_t q);

} // namespace wb::linalg
