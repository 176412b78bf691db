#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are polynomials over GF(p) of degree < e, stored packed as the
// base-p integer sum(c_i * p^i). Code 0 is the zero element and code 1 is one.
// Fields are interned: make(p, e) always returns a handle to the same
// immutable data, so handles compare equal exactly when (p, e) agree.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wb::gf {

namespace detail {
struct FieldData;
}

class FieldElem;

class FiniteField {
public:
  static constexpr std::uint64_t kDefaultLimit = 256;

  /// GF(p^e) with the smallest monic irreducible modulus (base-p order,
  /// constant coefficient least significant). Throws std::invalid_argument
  /// for non-prime p, e < 1, or p^e above `limit`.
  static FiniteField make(std::uint64_t p, unsigned e, std::uint64_t limit = kDefaultLimit);

  /// GF(q) for a prime power q.
  static FiniteField of_order(std::uint64_t q, std::uint64_t limit = kDefaultLimit);

  unsigned p() const;
  unsigned e() const;
  unsigned q() const;

  /// Modulus coefficients, constant term first; length e + 1, monic.
  const std::vector<unsigned>& modulus() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem element(std::uint32_t code) const;
  FieldElem from_coeffs(std::span<const unsigned> coeffs) const;

  /// All q elements; zero first, one second.
  std::vector<FieldElem> enumerate() const;

  // Code-level arithmetic for hot loops. Arguments must be valid codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  // Table-free reference routines on coefficient vectors; the cached
  // tables are built from these.
  std::uint32_t add_poly(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::string name() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.data_ == b.data_; }

private:
  explicit FiniteField(const detail::FieldData* data) : data_(data) {}
  friend class FieldElem;

  const detail::FieldData* data_;
};

/// A single element of a FiniteField. Operations between elements of
/// different fields throw std::invalid_argument.
class FieldElem {
public:
  FieldElem(FiniteField field, std::uint32_t code);

  FiniteField field() const { return field_; }
  std::uint32_t code() const { return code_; }
  std::vector<unsigned> coeffs() const;
  bool is_zero() const { return code_ == 0; }

  FieldElem inv() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b)
  { return a.field_ == b.field_ && a.code_ == b.code_; }

  std::string to_string() const;

private:
  FiniteField field_;
  std::uint32_t code_;
};

/// Multiplicative order of a nonzero element.
unsigned multiplicative_order(const FieldElem& a);

} // namespace wb::gf
