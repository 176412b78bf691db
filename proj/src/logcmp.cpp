#include "wreathbase/logcmp.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include <mpfr.h>

namespace wb::logcmp {

Nat integer_root(const Nat& n, unsigned k)
{
  if (k == 0)
    throw std::invalid_argument("zeroth root");
  if (n < 2 || k == 1)
    return n;
  Nat lo = 1;
  Nat hi = Nat(1) << (msb(n) / k + 1);
  while (lo < hi) {
    const Nat mid = (lo + hi + 1) / 2;
    if (wb::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

PerfectPower perfect_power(const Nat& n)
{
  if (n < 1)
    throw std::invalid_argument("perfect_power needs n >= 1");
  if (n < 4)
    return {n, 1};
  const auto bits = static_cast<unsigned>(msb(n));
  for (unsigned k = bits; k >= 2; --k) {
    const Nat r = integer_root(n, k);
    if (r >= 2 && wb::pow(r, k) == n)
      return {r, k};
  }
  return {n, 1};
}

namespace {

class Real {
public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

private:
  mpfr_t v_;
};

struct Interval {
  Real lo;
  Real hi;
  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

void log_interval(const Nat& a, Interval& out)
{
  const std::string s = a.str();
  mpfr_set_str(out.lo.get(), s.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(out.hi.get(), s.c_str(), 10, MPFR_RNDU);
  mpfr_log(out.lo.get(), out.lo.get(), MPFR_RNDD);
  mpfr_log(out.hi.get(), out.hi.get(), MPFR_RNDU);
  // log of an integer >= 1 is >= 0
  if (mpfr_sgn(out.lo.get()) < 0)
    mpfr_set_zero(out.lo.get(), 1);
}

int interval_compare(const Nat& a, const Nat& b, const Nat& c, const Nat& d)
{
  for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 2) {
    Interval la(prec), lb(prec), lc(prec), ld(prec), left(prec), right(prec);
    log_interval(a, la);
    log_interval(b, lb);
    log_interval(c, lc);
    log_interval(d, ld);
    mpfr_mul(left.lo.get(), la.lo.get(), lb.lo.get(), MPFR_RNDD);
    mpfr_mul(left.hi.get(), la.hi.get(), lb.hi.get(), MPFR_RNDU);
    mpfr_mul(right.lo.get(), lc.lo.get(), ld.lo.get(), MPFR_RNDD);
    mpfr_mul(right.hi.get(), lc.hi.get(), ld.hi.get(), MPFR_RNDU);
    if (mpfr_less_p(left.hi.get(), right.lo.get()))
      return -1;
    if (mpfr_greater_p(left.lo.get(), right.hi.get()))
      return 1;
  }
  throw std::runtime_error("log comparison not separated at maximum precision");
}

constexpr unsigned kMaxExactExponent = 4096;

int cmp(const Nat& x, const Nat& y) { return x < y ? -1 : (x > y ? 1 : 0); }

} // namespace

int compare_log_products(const Nat& a, const Nat& b, const Nat& c, const Nat& d)
{
  for (const Nat* x : {&a, &b, &c, &d})
    if (*x < 1)
      throw std::invalid_argument("logarithm of a non-positive number");
  const bool left_zero = a == 1 || b == 1;
  const bool right_zero = c == 1 || d == 1;
  if (left_zero || right_zero)
    return left_zero && right_zero ? 0 : (left_zero ? -1 : 1);

  const std::array<PerfectPower, 4> pp{perfect_power(a), perfect_power(b), perfect_power(c),
                                       perfect_power(d)};
  // e_x e_y log X log Y vs e_z e_w log Z log W; if X = Z, compare
  // Y^(e_x e_y) with W^(e_z e_w).
  const std::array<std::array<int, 4>, 4> pairings{{{0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 2, 3}, {1, 0, 3, 2}}};
  for (const auto& [x, y, z, w] : pairings) {
    if (pp[x].base != pp[z].base)
      continue;
    const std::uint64_t left_exp = std::uint64_t(pp[x].exp) * pp[y].exp;
    const std::uint64_t right_exp = std::uint64_t(pp[z].exp) * pp[w].exp;
    if (left_exp > kMaxExactExponent || right_exp > kMaxExactExponent)
      break;
    return cmp(wb::pow(pp[y].base, left_exp), wb::pow(pp[w].base, right_exp));
  }
  return interval_compare(a, b, c, d);
}

LogRatio::LogRatio(Nat num, Nat den) : num_(std::move(num)), den_(std::move(den))
{
  if (num_ < 1 || den_ < 2)
    throw std::invalid_argument("log ratio needs num >= 1 and den >= 2");
}

LogRatio LogRatio::from_rational(const Rational& r)
{
  if (r < 0)
    throw std::invalid_argument("negative constant");
  const Nat p = boost::multiprecision::numerator(r);
  const Nat q = boost::multiprecision::denominator(r);
  if (p > kMaxExactExponent || q > kMaxExactExponent)
    throw std::invalid_argument("rational constant has too large a numerator or denominator");
  return LogRatio(Nat(1) << static_cast<unsigned>(p), Nat(1) << static_cast<unsigned>(q));
}

std::optional<Rational> LogRatio::as_rational() const
{
  if (num_ == 1)
    return Rational(0);
  const auto n = perfect_power(num_);
  const auto d = perfect_power(den_);
  if (n.base != d.base)
    return std::nullopt;
  return Rational(n.exp, d.exp);
}

double log_approx(const Nat& a)
{
  Real x(128);
  mpfr_set_str(x.get(), a.str().c_str(), 10, MPFR_RNDN);
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

double LogRatio::approx() const
{
  Real n(128), d(128);
  mpfr_set_str(n.get(), num_.str().c_str(), 10, MPFR_RNDN);
  mpfr_set_str(d.get(), den_.str().c_str(), 10, MPFR_RNDN);
  mpfr_log(n.get(), n.get(), MPFR_RNDN);
  mpfr_log(d.get(), d.get(), MPFR_RNDN);
  mpfr_div(n.get(), n.get(), d.get(), MPFR_RNDN);
  return mpfr_get_d(n.get(), MPFR_RNDN);
}

std::string LogRatio::to_string() const
{
  if (auto r = as_rational())
    return wb::to_string(*r);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", approx());
  return "log(" + num_.str() + ")/log(" + den_.str() + ") ~ " + buf;
}

int compare(const LogRatio& x, const LogRatio& y)
{
  // log xn / log xd vs log yn / log yd, denominators positive
  return compare_log_products(x.num(), y.den(), y.num(), x.den());
}

} // namespace wb::logcmp
