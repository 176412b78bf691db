#include <doctest.h>

#include <stdexcept>

#include "wreathbase/group_io.hpp"
#include "wreathbase/permgroup.hpp"

using namespace wb;
using namespace wb::perm;

TEST_CASE("permutations")
{
  const auto a = Perm::from_cycles(3, {{0, 1}});
  const auto b = Perm::from_cycles(3, {{1, 2}});
  // right action: a first, then b
  CHECK(a.then(b).images() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(a.then(b).to_cycle_string() == "(1 3 2)");
  CHECK(a.then(a).is_identity());
  CHECK(a.then(b).then(a.then(b).inverse()).is_identity());
  CHECK(Perm::identity(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("orders of standard groups")
{
  CHECK(symmetric(1).order() == 1);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(2).order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(dihedral(5).order() == 10);
  CHECK(affine_line(5).order() == 20);
  CHECK(affine_line(7).order() == 42);
  CHECK(psl2_5().order() == 60);
  CHECK(psl2_5().degree() == 6);
  CHECK(wreath_imprimitive(2, 2).order() == 8);
  CHECK(wreath_imprimitive(3, 2).order() == 72);
  CHECK(symmetric(8).order() == 40320);
  CHECK_THROWS_AS(symmetric(10), BudgetExceeded);
  CHECK(symmetric(10, 4'000'000).order() == 3628800);
}

TEST_CASE("element store")
{
  const auto g = dihedral(6);
  CHECK(g.element_perm(0).is_identity());
  CHECK(g.contains(Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})));
  CHECK_FALSE(g.contains(Perm::from_cycles(6, {{0, 1}})));
  for (std::size_t i = 0; i < g.order(); ++i)
    CHECK(g.contains(g.element_perm(i).inverse()));
}

TEST_CASE("orbits and stabilizers")
{
  const auto g = PermGroup::from_generators(5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{2, 3, 4}})});
  CHECK(g.order() == 6);
  CHECK(g.orbits() == std::vector<std::vector<std::uint32_t>>{{0, 1}, {2, 3, 4}});
  CHECK(g.stabilizer_order(0) == 3);
  CHECK_FALSE(g.is_transitive());
  CHECK(symmetric(5).stabilizer_order(2) == 24);
}

TEST_CASE("structural predicates")
{
  CHECK(symmetric(4).is_primitive());
  CHECK_FALSE(dihedral(4).is_primitive());
  CHECK(cyclic(5).is_primitive());
  CHECK_FALSE(cyclic(4).is_primitive());
  CHECK(psl2_5().is_primitive());
  CHECK(affine_line(7).is_primitive());
  CHECK_FALSE(wreath_imprimitive(2, 2).is_primitive());
  CHECK(wreath_imprimitive(2, 2).minimal_block(1) == std::vector<std::uint32_t>{0, 1});
  CHECK(cyclic(6).is_semiregular());
  CHECK_FALSE(symmetric(3).is_semiregular());
  CHECK(alternating(4).contains_alternating());
  CHECK(symmetric(3).contains_alternating());
  CHECK_FALSE(dihedral(4).contains_alternating());
  CHECK_FALSE(psl2_5().contains_alternating());
}

TEST_CASE("generator files")
{
  const auto g = parse_generators_text("# affine maps\ndegree 5\n(1 2 3 4 5)\n\n(2 3 5 4)  # x -> 2x\n");
  CHECK(g.order() == 20);
  const auto back = parse_generators_text(format_generators(g));
  CHECK(back.order() == 20);
  CHECK(back.generators() == g.generators());

  CHECK_THROWS_WITH_AS(parse_generators_text("(1 2)\n"), doctest::Contains("line 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_generators_text("degree 3\n(1 2)\n(1 4)\n"), doctest::Contains("line 3"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_generators_text("degree 3\n(1 2 1)\n"), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_generators_text("degree 3\n(1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators_text("degree 10\n(1 2 3 4 5 6 7 8 9 10)\n(1 2)\n"), BudgetExceeded);
}

TEST_CASE("builtin names")
{
  CHECK(builtin_group("S5").order() == 120);
  CHECK(builtin_group("A5").order() == 60);
  CHECK(builtin_group("C9").order() == 9);
  CHECK(builtin_group("D7").order() == 14);
  CHECK(builtin_group("S3wrS2").order() == 72);
  CHECK(builtin_group("AGL1_5").order() == 20);
  CHECK(builtin_group("PSL2_5").order() == 60);
  CHECK_THROWS_AS(builtin_group("M11"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("AGL1_6"), std::invalid_argument);
}
