#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wb {

/// Arbitrary-precision natural number used for every counting result.
using Nat = boost::multiprecision::cpp_int;
/// Exact rational; all bound checks go through this, never floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a configured enumeration budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a computed value contradicts a proven statement.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
};

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t q);

/// Same as prime_power but throws std::invalid_argument.
PrimePower require_prime_power(std::uint64_t q);

Nat pow(const Nat& base, std::uint64_t exp);
Nat factorial(unsigned n);
Nat binomial(unsigned n, unsigned k);

/// Overflow-checked integer power; nullopt if base^exp > limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = UINT64_MAX);

inline std::string to_string(const Nat& n) { return n.str(); }
std::string to_string(const Rational& r);

} // namespace wb
