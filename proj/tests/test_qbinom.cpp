#include <doctest.h>

#include "wreathbase/qbinom.hpp"

using namespace wb;
using qbinom::gaussian_binomial;

TEST_CASE("known values")
{
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(3, 1, 4) == 21);
  CHECK(gaussian_binomial(5, 2, 4) == 5797);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  CHECK(gaussian_binomial(3, 2, 3) == 13);
  CHECK(gaussian_binomial(2, 5, 3) == 0);
  CHECK(gaussian_binomial(7, 0, 5) == 1);
  CHECK(gaussian_binomial(7, 7, 5) == 1);
  CHECK(gaussian_binomial(40, 20, 9).str().size() > 150);
}

TEST_CASE("q-Pascal and symmetry")
{
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9})
    for (unsigned m = 1; m <= 9; ++m)
      for (unsigned d = 1; d <= m; ++d) {
        CHECK(gaussian_binomial(m, d, q) == gaussian_binomial(m, m - d, q));
        CHECK(gaussian_binomial(m, d, q) ==
              gaussian_binomial(m - 1, d - 1, q) + wb::pow(Nat(q), d) * gaussian_binomial(m - 1, d, q));
      }
}

TEST_CASE("subspace count oracle")
{
  CHECK(qbinom::count_subspaces_oracle(3, 2, 2) == 7);
  CHECK(qbinom::count_subspaces_oracle(4, 2, 3) == 130);
  CHECK(qbinom::count_subspaces_oracle(3, 1, 4) == 21);
  CHECK(qbinom::count_subspaces_oracle(2, 5, 3) == 0);
  for (std::uint64_t q : {2, 3, 4, 5})
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned d = 0; d <= m; ++d)
        CHECK(qbinom::count_subspaces_oracle(m, d, q) == gaussian_binomial(m, d, q));
  CHECK_THROWS_AS(qbinom::count_subspaces_oracle(30, 15, 2, 1000), BudgetExceeded);
}

TEST_CASE("c(q) and the bounds")
{
  CHECK(qbinom::c_of_q(3) == Rational(5, 9));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    CHECK(qbinom::c_of_q(q) > 0);
    CHECK(qbinom::c_of_q(q) < 1);
  }
  const auto b = qbinom::check_qbinom_bounds(2, 3, 2);
  CHECK(b.lower_ok);
  CHECK(b.upper_ok);
  CHECK(b.value == gaussian_binomial(5, 2, 2));
  CHECK_THROWS_AS(qbinom::check_qbinom_bounds(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::check_qbinom_bounds(2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 6), std::invalid_argument);
}
