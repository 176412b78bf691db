#include "wreathbase/qbinom.hpp"

#include <stdexcept>
#include <vector>

namespace wb::qbinom {

Nat gaussian_binomial(unsigned m, unsigned d, std::uint64_t q)
{
  require_prime_power(q);
  if (d > m)
    return 0;
  Nat num = 1;
  Nat den = 1;
  for (unsigned i = 0; i < d; ++i) {
    num *= wb::pow(Nat(q), m - i) - 1;
    den *= wb::pow(Nat(q), i + 1) - 1;
  }
  if (num % den != 0)
    throw std::logic_error("inexact Gaussian binomial division");
  return num / den;
}

Nat count_subspaces_oracle(unsigned m, unsigned d, std::uint64_t q, std::uint64_t budget)
{
  require_prime_power(q);
  if (d > m)
    return 0;
  if (binomial(m, d) > budget)
    throw BudgetExceeded("pivot profile count exceeds budget");

  Nat total = 0;
  std::vector<unsigned> pivots(d);
  for (unsigned i = 0; i < d; ++i)
    pivots[i] = i;
  while (true) {
    unsigned free_entries = 0;
    for (unsigned i = 0; i < d; ++i)
      free_entries += (m - 1 - pivots[i]) - (d - 1 - i);
    total += wb::pow(Nat(q), free_entries);

    // next d-subset in lexicographic order
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && pivots[i] == m - d + static_cast<unsigned>(i))
      --i;
    if (i < 0)
      break;
    ++pivots[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j)
      pivots[j] = pivots[j - 1] + 1;
  }
  return total;
}

Rational c_of_q(std::uint64_t q)
{
  return Rational(1) - Rational(1, q) - Rational(1, Nat(q) * q);
}

BoundsCheck check_qbinom_bounds(unsigned d, unsigned s, std::uint64_t q)
{
  if (d < 1 || s < 1)
    throw std::invalid_argument("d and s must be positive");
  BoundsCheck out;
  out.value = gaussian_binomial(d + s, d, q);
  out.c_of_q = c_of_q(q);
  const Nat qds = wb::pow(Nat(q), std::uint64_t(d) * s);
  out.lower_ok = qds <= out.value;
  out.upper_ok = Rational(out.value) <= Rational(qds) / out.c_of_q;
  return out;
}

} // namespace wb::qbinom
