#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "linksym/group.hpp"
#include "linksym/named_groups.hpp"
#include "oracles.hpp"

using namespace linksym;

TEST_CASE("permutation composition is right-to-left") {
  Perm a = Perm::from_cycles(3, {{0, 1, 2}});
  Perm b = Perm::from_cycles(3, {{0, 1}});
  // (a*b)(0) = a(b(0)) = a(1) = 2
  CHECK((a * b)[0] == 2);
  CHECK((b * a)[0] == 0);
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Perm::from_ints({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_ints({0, 3}), std::invalid_argument);
  Perm c = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(c.order() == 6);
  CHECK(c.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(Perm(4).to_cycle_string() == "()");
  CHECK(Perm::from_cycles(5, {{0, 1, 2, 3, 4}}).order() == 5);
}

TEST_CASE("closure generates the expected groups") {
  SECTION("a 3-cycle generates the cyclic group of order 3") {
    FiniteGroup g = FiniteGroup::closure(3, {Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK(g.order() == 3);
  }
  SECTION("no generators on one point give the trivial group") {
    FiniteGroup g = FiniteGroup::closure(1, {});
    CHECK(g.order() == 1);
  }
  SECTION("alternating generators reach order 5!/2") {
    FiniteGroup a5 = alternating_group(5);
    CHECK(a5.order() == 60);
    CHECK(a5.order() == symmetric_group(5).order() / 2);
  }
  SECTION("order cap raises") {
    ClosureLimits lim;
    lim.max_order = 50;
    CHECK_THROWS_AS(FiniteGroup::closure(
                        5,
                        {Perm::from_cycles(5, {{0, 1}}),
                         Perm::from_cycles(5, {{0, 1, 2, 3, 4}})},
                        lim),
                    enumeration_too_large);
  }
}

TEST_CASE("closure satisfies the group axioms on sampled pairs") {
  FiniteGroup g = symmetric_group(4);
  CHECK(g.index_of(Perm(4)).has_value());
  std::mt19937_64 rng(oracles::test_seed());
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const Perm& a = g.element(pick(rng));
    const Perm& b = g.element(pick(rng));
    CHECK(g.index_of(a * b).has_value());
    CHECK(g.index_of(a.inverse()).has_value());
  }
}

TEST_CASE("closure output is deterministic and canonical") {
  FiniteGroup a = symmetric_group(4);
  FiniteGroup b = FiniteGroup::closure(
      4, {Perm::from_cycles(4, {{2, 3}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  REQUIRE(a.order() == b.order());
  CHECK(a.elements() == b.elements());
  CHECK(a.descriptor_hash() == b.descriptor_hash());
}

TEST_CASE("multiplication table agrees with permutation arithmetic") {
  FiniteGroup g = dihedral_group(6);
  const CayleyTable& t = g.table();
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    CHECK(g.element(t.inv[i]) == g.element(i).inverse());
    CHECK(t.elt_order[i] == g.element(i).order());
    for (std::uint32_t j = 0; j < g.order(); ++j)
      CHECK(g.element(t.product(i, j)) == g.element(i) * g.element(j));
  }
}

TEST_CASE("small generating sets regenerate the group") {
  for (const FiniteGroup& g :
       {symmetric_group(4), cyclic_group(12), elementary_abelian_2(3)}) {
    std::vector<Perm> gens = small_generating_set(g.elements());
    FiniteGroup back = FiniteGroup::closure(g.degree(), gens);
    CHECK(back.order() == g.order());
    CHECK(back.elements() == g.elements());
    CHECK(gens.size() <= 4);
  }
}

TEST_CASE("named groups have the advertised orders") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(2).order() == 4);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(klein_four_group().order() == 4);
  CHECK(elementary_abelian_2(3).order() == 8);
  CHECK(special_linear_2(3).order() == 24);
  CHECK(special_linear_2(5).order() == 120);
  CHECK(group_from_name("A5").order() == 60);
  CHECK(group_from_name("D4").order() == 8);
  CHECK_THROWS_AS(group_from_name("X9"), std::invalid_argument);
}
