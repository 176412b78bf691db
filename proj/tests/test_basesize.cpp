#include <doctest.h>

#include "wreathbase/basesize.hpp"
#include "wreathbase/distinguishing.hpp"

using namespace wb;
using namespace wb::basesize;

TEST_CASE("closed form")
{
  CHECK(base_size_closed_form(1, 2, 2) == 2);
  CHECK(base_size_closed_form(2, 3, 2) == 3);
  CHECK(base_size_closed_form(2, 3, 1) == 2);
  CHECK(base_size_closed_form(1, 3, 4) == 2);
  CHECK(base_size_closed_form(1, 3, 5) == 3);
  CHECK(base_size_closed_form(3, 2, 15) == 4);
  CHECK(base_size_closed_form(3, 2, 16) == 5);
  CHECK_THROWS_AS(base_size_closed_form(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(base_size_closed_form(1, 2, 0), std::invalid_argument);
}

TEST_CASE("log form")
{
  CHECK(ceil_log_ratio(1, 2, 1) == 0);
  CHECK(ceil_log_ratio(1, 2, 2) == 1);
  CHECK(ceil_log_ratio(1, 2, 5) == 3);
  CHECK(ceil_log_ratio(2, 3, 81) == 2);
  CHECK(ceil_log_ratio(2, 3, 82) == 3);
  const auto lf = base_size_log_form(2, 3, 2);
  CHECK(lf.b == 3);
  CHECK(lf.ceil_term == 1);
  CHECK(lf.c == 0);
  for (unsigned d = 1; d <= 4; ++d)
    for (std::uint64_t q : {2, 3, 4, 5})
      for (unsigned dl = 1; dl <= 300; ++dl) {
        const auto f = base_size_log_form(d, q, dl);
        CHECK((f.c == 0 || f.c == -1));
      }
}

TEST_CASE("brute force, frozen values")
{
  CHECK(base_size_brute_force({1, 3, perm::symmetric(2)}) == 2);
  CHECK(base_size_brute_force({1, 2, perm::symmetric(2)}) == 1);
  CHECK(base_size_brute_force({2, 2, perm::symmetric(1)}) == 2);
  CHECK(base_size_brute_force({1, 4, perm::symmetric(3)}) == 2);
  CHECK(base_size_brute_force({1, 3, perm::cyclic(3)}) == 2);
  CHECK(base_size_brute_force({1, 2, perm::symmetric(3)}) == 2);
  CHECK(base_size_brute_force({2, 2, perm::symmetric(2)}) == 3);
}

TEST_CASE("brute force budgets")
{
  BruteOptions tight;
  tight.max_group_order = 1000;
  CHECK_THROWS_AS(base_size_brute_force({2, 3, perm::symmetric(2)}, tight), BudgetExceeded);
  BruteOptions few_points;
  few_points.max_points = 10;
  CHECK_THROWS_AS(base_size_brute_force({1, 5, perm::symmetric(2)}, few_points), BudgetExceeded);
}

TEST_CASE("minimal base of an explicit action")
{
  CHECK(minimal_base_size(orbits::ExplicitAction::trivial(5)) == 0);
  CHECK(minimal_base_size(orbits::ExplicitAction::gl_on_vectors(2, gf::FiniteField::of_order(2))) == 2);
  CHECK(minimal_base_size(orbits::ExplicitAction::gl_on_vectors(3, gf::FiniteField::of_order(2))) == 3);
  CHECK(minimal_base_size(orbits::ExplicitAction::gl_on_vectors(1, gf::FiniteField::of_order(5))) == 1);
}

TEST_CASE("multi-base criterion")
{
  const WreathSpec spec{1, 3, perm::symmetric(2)};
  const auto m1 = bailey_cameron_check(spec, 1);
  CHECK(m1.multibase_orbits == 1);
  CHECK(m1.dL == 2);
  CHECK_FALSE(m1.criterion);
  CHECK(m1.consistent());
  const auto m2 = bailey_cameron_check(spec, 2);
  CHECK(m2.multibase_orbits == 4);
  CHECK(m2.criterion);
  CHECK(m2.consistent());

  // (1,2): criterion still agrees with brute force
  const WreathSpec one_two{1, 2, perm::symmetric(2)};
  for (unsigned m : {1u, 2u, 3u})
    CHECK(bailey_cameron_check(one_two, m).consistent());
}

TEST_CASE("d(L) <= 4 gives b <= d + 1")
{
  for (unsigned d = 1; d <= 5; ++d)
    for (std::uint64_t q : {2, 3, 4, 5, 7})
      for (unsigned dl = 1; dl <= 4; ++dl) {
        const auto c = small_dl_bound(d, q, dl);
        CHECK((c.holds || c.excluded_point));
      }
  const auto c = small_dl_bound(1, 2, 4);
  CHECK(c.excluded_point);
  CHECK_FALSE(c.holds);
  CHECK(c.b == 3);
  CHECK_THROWS_AS(small_dl_bound(1, 3, 5), std::invalid_argument);
}
