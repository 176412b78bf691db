#include "wreathbase/pyber.hpp"

#include <stdexcept>

#include "wreathbase/linalg.hpp"

namespace wb::pyber {

namespace {
const LogRatio kOne{2, 2};
const LogRatio kTwo{4, 2};
const LogRatio kThree{8, 2};

void require_above_one(const LogRatio& C)
{
  if (logcmp::compare(C, kOne) <= 0)
    throw std::invalid_argument("constant C must exceed 1, got " + C.to_string());
}
} // namespace

MinimalC minimal_pyber_C(unsigned ell, const Nat& order_L, unsigned dL)
{
  if (ell < 1 || order_L < 1 || dL < 1)
    throw std::invalid_argument("l, |L| and d(L) must be positive");
  LogRatio ratio(wb::pow(Nat(2) * dL, ell), order_L * wb::pow(Nat(2), ell));
  const bool any = logcmp::compare(ratio, kOne) <= 0;
  return {any, std::move(ratio)};
}

bool hypothesis_holds(unsigned ell, const Nat& order_L, unsigned dL, const LogRatio& C)
{
  require_above_one(C);
  const auto minimal = minimal_pyber_C(ell, order_L, dL);
  return minimal.any_above_one || logcmp::compare(C, minimal.value) >= 0;
}

FamilyConstant family_constant(Family family, const FamilyParams& params)
{
  switch (family) {
  case Family::SmallDL:
    if (params.c < 1)
      throw std::invalid_argument("small_dL family needs c >= 1");
    // max{2, log(2c)/log 2}
    if (2 * params.c <= 4)
      return {kTwo, std::nullopt};
    return {LogRatio(Nat(2) * params.c, 2), std::nullopt};
  case Family::Primitive:
    if (params.alt_or_sym)
      return {kThree, kTwo};
    return {kThree, std::nullopt};
  case Family::Semiregular:
    return {kTwo, std::nullopt};
  case Family::Wreath:
    if (params.m < 2 || params.r < 2)
      throw std::invalid_argument("wreath family needs m, r >= 2");
    return {kTwo, std::nullopt};
  }
  throw std::invalid_argument("unknown family");
}

Family parse_family(const std::string& name)
{
  if (name == "small_dL" || name == "small")
    return Family::SmallDL;
  if (name == "primitive")
    return Family::Primitive;
  if (name == "semiregular")
    return Family::Semiregular;
  if (name == "wreath")
    return Family::Wreath;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(Family family)
{
  switch (family) {
  case Family::SmallDL: return "small_dL";
  case Family::Primitive: return "primitive";
  case Family::Semiregular: return "semiregular";
  case Family::Wreath: return "wreath";
  }
  return "?";
}

PyberCertificate certify(const basesize::WreathSpec& spec, const LogRatio& C,
                         const dist::SearchOptions& search)
{
  require_above_one(C);
  const auto dl = dist::distinguishing_number(spec.group, search);
  if (!dl.exact())
    throw std::runtime_error("distinguishing number not determined: " + dl.to_string());

  PyberCertificate cert;
  cert.d = spec.d;
  cert.q = spec.q;
  cert.ell = spec.blocks();
  cert.dL = dl.lower;
  cert.C = C;
  cert.b = basesize::base_size_closed_form(spec.d, spec.q, cert.dL);
  cert.order_L = spec.group.order_nat();
  cert.order_X0 = wb::pow(linalg::gl_order(spec.d, spec.q), cert.ell) * cert.order_L;
  cert.n = wb::pow(Nat(spec.q), std::uint64_t(spec.d) * cert.ell);
  cert.order_G = cert.n * cert.order_X0;
  cert.lhs = cert.b + 1;

  const double c = C.approx();
  cert.rhs_approx = c * logcmp::log_approx(cert.order_G) / logcmp::log_approx(cert.n) + c + 2;

  cert.hypothesis_ok = hypothesis_holds(static_cast<unsigned>(cert.ell), cert.order_L, cert.dL, C);
  if (!cert.hypothesis_ok)
    return cert;
  cert.conclusion_tested = true;
  // b + 1 <= C log|G|/log n + C + 2  <=>  log(n^(b-1)) log D <= log N log(|G| n)
  // for C = log N / log D
  if (cert.b <= 1) {
    cert.conclusion_ok = true;
  } else {
    cert.conclusion_ok =
        logcmp::compare_log_products(wb::pow(cert.n, cert.b - 1), C.den(), C.num(), cert.order_G * cert.n) <= 0;
  }
  return cert;
}

bool kk_factorial_check(unsigned kmax)
{
  for (unsigned k = 1; k <= kmax; ++k) {
    const Nat f = factorial(k);
    if (wb::pow(Nat(k), k) > f * f)
      return false;
  }
  return true;
}

bool sym_alt_power_check(unsigned ell)
{
  if (ell < 1)
    throw std::invalid_argument("l must be positive");
  const Nat sym = factorial(ell);
  const Nat alt = ell >= 2 ? sym / 2 : sym;
  const bool s_ok = wb::pow(Nat(ell), ell) <= sym * sym;
  const bool a_ok = wb::pow(Nat(ell - 1), ell) <= alt * alt;
  return s_ok && a_ok;
}

bool wreath_power_check(unsigned m, unsigned r)
{
  const Nat lhs = wb::pow(Nat(m), std::uint64_t(m) * r) * wb::pow(Nat(r), r);
  const Nat rhs = wb::pow(factorial(m), r) * factorial(r);
  return lhs <= rhs * rhs;
}

} // namespace wb::pyber
