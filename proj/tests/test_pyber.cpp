#include <doctest.h>

#include "wreathbase/logcmp.hpp"
#include "wreathbase/pyber.hpp"

using namespace wb;
using namespace wb::logcmp;
using namespace wb::pyber;

TEST_CASE("perfect powers and roots")
{
  CHECK(perfect_power(64).base == 2);
  CHECK(perfect_power(64).exp == 6);
  CHECK(perfect_power(36).base == 6);
  CHECK(perfect_power(36).exp == 2);
  CHECK(perfect_power(12).exp == 1);
  CHECK(perfect_power(1).base == 1);
  CHECK(integer_root(Nat(1000), 3) == 10);
  CHECK(integer_root(Nat(1001), 3) == 10);
  CHECK(integer_root(wb::pow(Nat(7), 30) - 1, 30) == 6);
}

TEST_CASE("log product comparison")
{
  // log 4 log 9 = log 2 log 81
  CHECK(compare_log_products(4, 9, 2, 81) == 0);
  CHECK(compare_log_products(4, 9, 2, 80) > 0);
  CHECK(compare_log_products(4, 9, 2, 82) < 0);
  // log 2 log 3 vs log 6 log 1
  CHECK(compare_log_products(2, 3, 6, 1) > 0);
  CHECK(compare_log_products(1, 5, 1, 7) == 0);
  // close call: log 10 log 10 vs log 9 log 11.1...
  CHECK(compare_log_products(10, 10, 9, 12) < 0);
  CHECK(compare_log_products(10, 10, 9, 11) > 0);
  // huge arguments
  const Nat big = wb::pow(Nat(3), 500);
  CHECK(compare_log_products(big, 2, wb::pow(Nat(3), 250), 4) == 0);
  CHECK(compare_log_products(big + 1, 2, wb::pow(Nat(3), 250), 4) > 0);
}

TEST_CASE("log ratios")
{
  CHECK(compare(LogRatio(8, 4), LogRatio::from_rational(Rational(3, 2))) == 0);
  CHECK(compare(LogRatio(16, 8), LogRatio::from_rational(Rational(4, 3))) == 0);
  CHECK(LogRatio(16, 8).as_rational() == Rational(4, 3));
  CHECK_FALSE(LogRatio(10, 3).as_rational().has_value());
  CHECK(compare(LogRatio(10, 3), LogRatio(9, 3)) > 0);
  CHECK(LogRatio(9, 3).to_string() == "2");
  CHECK(LogRatio(9, 3).approx() == doctest::Approx(2.0));
  CHECK(log_approx(wb::pow(Nat(2), 2000)) == doctest::Approx(2000 * 0.6931471805599453));
}

TEST_CASE("minimal constant")
{
  const auto c = minimal_pyber_C(2, 2, 2);
  CHECK_FALSE(c.any_above_one);
  CHECK(c.value.as_rational() == Rational(4, 3));
  CHECK(minimal_pyber_C(4, 24, 4).value.approx() == doctest::Approx(1.3977929430666671));
  // C_5 regular: (2*2)^5 / (5 * 2^5)
  CHECK(minimal_pyber_C(5, 5, 2).value.approx() == doctest::Approx(std::log(1024.0) / std::log(160.0)));
  CHECK(minimal_pyber_C(3, 6, 1).any_above_one);
}

TEST_CASE("hypothesis")
{
  CHECK(hypothesis_holds(2, 2, 2, LogRatio(16, 8)));
  CHECK_FALSE(hypothesis_holds(2, 2, 2, LogRatio::from_rational(Rational(13, 10))));
  CHECK(hypothesis_holds(2, 2, 2, LogRatio(4, 2)));
  CHECK_THROWS_AS(hypothesis_holds(2, 2, 2, LogRatio(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(hypothesis_holds(2, 2, 2, LogRatio(2, 4)), std::invalid_argument);
}

TEST_CASE("family constants")
{
  CHECK(family_constant(Family::Semiregular, {}).general.to_string() == "2");
  const auto prim = family_constant(Family::Primitive, {});
  CHECK(prim.general.to_string() == "3");
  CHECK_FALSE(prim.refined.has_value());
  FamilyParams as;
  as.alt_or_sym = true;
  CHECK(family_constant(Family::Primitive, as).refined->to_string() == "2");
  FamilyParams w;
  w.m = 1;
  w.r = 3;
  CHECK_THROWS_AS(family_constant(Family::Wreath, w), std::invalid_argument);
  FamilyParams small;
  small.c = 8;
  CHECK(compare(family_constant(Family::SmallDL, small).general, LogRatio(16, 2)) == 0);
  CHECK(parse_family("semiregular") == Family::Semiregular);
  CHECK(family_name(Family::Wreath) == "wreath");
  CHECK_THROWS_AS(parse_family("sporadic"), std::invalid_argument);
}

TEST_CASE("certificates")
{
  const auto cert = certify({1, 3, perm::cyclic(5)}, LogRatio(4, 2));
  CHECK(cert.dL == 2);
  CHECK(cert.b == 2);
  CHECK(cert.order_X0 == 160);
  CHECK(cert.n == 243);
  CHECK(cert.order_G == 38880);
  CHECK(cert.hypothesis_ok);
  CHECK(cert.conclusion_tested);
  CHECK(cert.conclusion_ok);

  const auto s5 = certify({2, 2, perm::symmetric(5)}, LogRatio(4, 2));
  CHECK(s5.hypothesis_ok);
  CHECK(s5.conclusion_ok);

  // C too small for S_2: hypothesis fails, conclusion untested
  const auto low = certify({1, 3, perm::symmetric(2)}, LogRatio::from_rational(Rational(11, 10)));
  CHECK_FALSE(low.hypothesis_ok);
  CHECK_FALSE(low.conclusion_tested);
  CHECK_THROWS_AS(certify({1, 3, perm::symmetric(2)}, LogRatio(3, 3)), std::invalid_argument);
}

TEST_CASE("factorial inequalities")
{
  CHECK(kk_factorial_check(100));
  for (unsigned ell = 1; ell <= 12; ++ell)
    CHECK(sym_alt_power_check(ell));
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned r = 1; r <= 6; ++r)
      CHECK(wreath_power_check(m, r));
}
