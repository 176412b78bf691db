#include "wreathbase/nat.hpp"

namespace wb {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q)
{
  if (q < 2)
    return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0)
    ++p;
  if (q % p != 0)
    p = q;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1)
    return std::nullopt;
  return PrimePower{p, e};
}

PrimePower require_prime_power(std::uint64_t q)
{
  auto pp = prime_power(q);
  if (!pp)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

Nat pow(const Nat& base, std::uint64_t exp)
{
  Nat result = 1;
  Nat b = base;
  while (exp) {
    if (exp & 1)
      result *= b;
    exp >>= 1;
    if (exp)
      b *= b;
  }
  return result;
}

Nat factorial(unsigned n)
{
  Nat r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Nat binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  Nat r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit)
{
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base)
      return std::nullopt;
    r *= base;
  }
  if (r > limit)
    return std::nullopt;
  return r;
}

std::string to_string(const Rational& r)
{
  const Nat num = boost::multiprecision::numerator(r);
  const Nat den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

} // namespace wb
