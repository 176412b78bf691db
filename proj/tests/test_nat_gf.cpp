#include <doctest.h>

#include <set>
#include <stdexcept>

#include "wreathbase/gf.hpp"
#include "wreathbase/nat.hpp"

using namespace wb;
using gf::FiniteField;

TEST_CASE("prime powers")
{
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power(9)->p == 3);
  CHECK(prime_power(9)->e == 2);
  CHECK(prime_power(128)->e == 7);
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  CHECK_THROWS_AS(require_prime_power(12), std::invalid_argument);
}

TEST_CASE("big integer helpers")
{
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(wb::pow(Nat(3), 40).str() == "12157665459056928801");
  CHECK_FALSE(checked_pow(2, 20, 1'000'000).has_value());
  CHECK(checked_pow(2, 19, 1'000'000) == std::optional<std::uint64_t>(524'288));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("moduli are the smallest monic irreducibles")
{
  CHECK(FiniteField::of_order(2).modulus() == std::vector<unsigned>{0, 1});
  CHECK(FiniteField::of_order(4).modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(FiniteField::of_order(8).modulus() == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(FiniteField::of_order(9).modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(FiniteField::of_order(16).modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
  CHECK(FiniteField::of_order(9).name() == "GF(9)");
}

TEST_CASE("fields are interned")
{
  CHECK(FiniteField::of_order(25) == FiniteField::make(5, 2));
  CHECK_FALSE(FiniteField::of_order(5) == FiniteField::of_order(25));
}

TEST_CASE("construction errors")
{
  CHECK_THROWS_AS(FiniteField::of_order(6), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
  CHECK_THROWS(FiniteField::of_order(1024, 256));
  CHECK_THROWS_AS(FiniteField::of_order(4).element(4), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::of_order(4).zero().inv(), std::domain_error);
  CHECK_THROWS_AS(FiniteField::of_order(4).one() + FiniteField::of_order(2).one(), std::invalid_argument);
}

TEST_CASE("GF(4) by hand")
{
  const auto f = FiniteField::of_order(4);
  const auto x = f.element(2); // coefficients (0, 1): the class of x
  CHECK(x.coeffs() == std::vector<unsigned>{0, 1});
  CHECK(x * x == x + f.one()); // x^2 = x + 1
  CHECK(x * x * x == f.one());
  CHECK(x.inv() == x + f.one());
  CHECK(multiplicative_order(x) == 3);
}

TEST_CASE("GF(9): x^2 = -1")
{
  const auto f = FiniteField::of_order(9);
  const unsigned c[] = {0, 1};
  const auto x = f.from_coeffs(c);
  CHECK(x * x == -f.one());
  CHECK(multiplicative_order(x) == 4);
}

TEST_CASE("field axioms for every q <= 64")
{
  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (!prime_power(q))
      continue;
    CAPTURE(q);
    const auto f = FiniteField::of_order(q);
    const auto n = static_cast<std::uint32_t>(q);
    for (std::uint32_t a = 0; a < n; ++a) {
      REQUIRE(f.add(a, 0) == a);
      REQUIRE(f.mul(a, 1) == a);
      REQUIRE(f.add(a, f.neg(a)) == 0);
      if (a != 0)
        REQUIRE(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < n; ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.add(a, b) == f.add_poly(a, b));
        REQUIRE(f.mul(a, b) == f.mul_poly(a, b));
        REQUIRE(f.sub(f.add(a, b), b) == a);
      }
    }
    // associativity and distributivity on a strided sample of triples
    const std::uint32_t step = n > 16 ? 3 : 1;
    for (std::uint32_t a = 0; a < n; a += step)
      for (std::uint32_t b = 0; b < n; b += step)
        for (std::uint32_t c = 0; c < n; ++c) {
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
  }
}

TEST_CASE("multiplicative group is cyclic")
{
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256}) {
    CAPTURE(q);
    const auto f = FiniteField::of_order(q);
    unsigned best = 0;
    for (const auto& a : f.enumerate())
      if (!a.is_zero())
        best = std::max(best, multiplicative_order(a));
    CHECK(best == q - 1);
  }
}

TEST_CASE("enumerate lists each element once")
{
  const auto f = FiniteField::of_order(27);
  std::set<std::uint32_t> codes;
  for (const auto& a : f.enumerate())
    codes.insert(a.code());
  CHECK(codes.size() == 27);
  CHECK(*codes.begin() == 0);
}
