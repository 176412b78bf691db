#pragma once

// Decides inequalities between products of logarithms of natural numbers.
//
// Comparisons reduce to integer power comparisons whenever the arguments
// share perfect-power bases (log a * log b vs log c * log d with a, c powers
// of one base becomes b^i vs d^j). Otherwise MPFR interval arithmetic with
// directed rounding is refined until the intervals separate.

#include <optional>
#include <string>

#include "wreathbase/nat.hpp"

namespace wb::logcmp {

struct PerfectPower {
  Nat base;      // not itself a perfect power (or 1)
  unsigned exp = 1;
};

/// n = base^exp with exp maximal. n >= 1.
PerfectPower perfect_power(const Nat& n);

/// Largest r with r^k <= n.
Nat integer_root(const Nat& n, unsigned k);

/// Sign of log(a) log(b) - log(c) log(d); arguments must be >= 1. Throws
/// std::runtime_error if the interval fallback cannot separate the sides.
int compare_log_products(const Nat& a, const Nat& b, const Nat& c, const Nat& d);

/// The positive real log(num) / log(den), den >= 2, num >= 1.
class LogRatio {
public:
  LogRatio(Nat num, Nat den);
  /// Exact rational p/q >= 0 as log(2^p) / log(2^q).
  static LogRatio from_rational(const Rational& r);

  const Nat& num() const { return num_; }
  const Nat& den() const { return den_; }

  /// Value as an exact rational when num and den are powers of one base.
  std::optional<Rational> as_rational() const;
  double approx() const;
  std::string to_string() const;

private:
  Nat num_;
  Nat den_;
};

/// Sign of x - y.
int compare(const LogRatio& x, const LogRatio& y);

/// Double approximation of log(a).
double log_approx(const Nat& a);

} // namespace wb::logcmp
