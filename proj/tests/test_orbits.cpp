#include <doctest.h>

#include "wreathbase/orbits.hpp"
#include "wreathbase/qbinom.hpp"

using namespace wb;
using namespace wb::orbits;

TEST_CASE("spanning-tuple orbits, known values")
{
  CHECK(count_spanning_orbits_canonical(2, 2, 3) == 7);
  CHECK(count_spanning_orbits_canonical(1, 3, 1) == 1);
  CHECK(count_spanning_orbits_canonical(2, 3, 3) == 13);
  CHECK(count_spanning_orbits_canonical(2, 4, 2) == 1);
  CHECK(count_spanning_orbits_partition(2, 2, 3) == 7);
  CHECK(count_spanning_orbits_partition(1, 3, 1) == 1);
  CHECK(count_spanning_orbits_partition(2, 3, 3) == 13);
  CHECK(count_spanning_orbits_partition(2, 4, 2) == 1);
  CHECK(count_spanning_orbits_canonical(3, 2, 2) == 0);
  CHECK(count_spanning_orbits_partition(3, 2, 2) == 0);
}

TEST_CASE("both methods agree with the Gaussian binomial")
{
  for (unsigned d = 1; d <= 2; ++d)
    for (std::uint64_t q : {2, 3, 4, 5})
      for (unsigned m = d; m <= d + 2; ++m) {
        CAPTURE(d);
        CAPTURE(q);
        CAPTURE(m);
        const auto g = qbinom::gaussian_binomial(m, d, q);
        CHECK(count_spanning_orbits_canonical(d, q, m) == g);
        CHECK(count_spanning_orbits_partition(d, q, m) == g);
      }
}

TEST_CASE("count does not depend on position order")
{
  const unsigned order[] = {3, 1, 0, 2};
  CHECK(count_spanning_orbits_canonical(2, 3, 4, kDefaultTupleBudget, order) ==
        count_spanning_orbits_canonical(2, 3, 4));
  const unsigned bad[] = {0, 0, 1, 2};
  CHECK_THROWS_AS(count_spanning_orbits_canonical(2, 3, 4, kDefaultTupleBudget, bad), std::invalid_argument);
}

TEST_CASE("budgets")
{
  CHECK_THROWS_AS(count_spanning_orbits_canonical(2, 5, 6, 1000), BudgetExceeded);
  CHECK_THROWS_AS(count_spanning_orbits_partition(2, 5, 6, 1000), BudgetExceeded);
  CHECK_THROWS_AS(count_spanning_orbits_partition(3, 3, 3, kDefaultTupleBudget, 100), BudgetExceeded);
}

TEST_CASE("multi-base orbits")
{
  const auto gl22 = ExplicitAction::gl_on_vectors(2, gf::FiniteField::of_order(2));
  CHECK(gl22.num_points() == 4);
  CHECK(gl22.num_elements() == 6);
  CHECK(count_multibase_orbits(gl22, 1) == 0);
  CHECK(count_multibase_orbits(gl22, 2) == 1);
  CHECK(count_multibase_orbits(gl22, 3) == 7);

  const auto gl13 = ExplicitAction::gl_on_vectors(1, gf::FiniteField::of_order(3));
  CHECK(count_multibase_orbits(gl13, 2) == 4);

  // trivial group: every tuple is a multi-base
  CHECK(count_multibase_orbits(ExplicitAction::trivial(3), 4) == 81);
  // GL_1(2) is trivial, so the zero vector alone is a base
  const auto gl12 = ExplicitAction::gl_on_vectors(1, gf::FiniteField::of_order(2));
  CHECK(count_multibase_orbits(gl12, 3) == 8);
  CHECK(count_spanning_orbits_canonical(1, 2, 3) == 7);
}

TEST_CASE("explicit action validation")
{
  CHECK_THROWS_AS(ExplicitAction(3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ExplicitAction(2, {0, 2}), std::invalid_argument);
}
