#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "linksym/linking.hpp"
#include "oracles.hpp"

using namespace linksym;

namespace {

WhittenElement random_element(const FiniteGroup& gamma, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, gamma.order() - 1);
  return whitten_from_perm(gamma.element(pick(rng)));
}

LinkingMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> entry(-3, 3);
  LinkingMatrix m = LinkingMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m.entries[i][j] = m.entries[j][i] = entry(rng);
  return m;
}

// Reference transformer: read the matrix off a transformed link record.
// A record (a, o, c) over base linking numbers L has matrix
// a * o_i * o_j * L[c_i][c_j].
LinkingMatrix matrix_of_record(const LinkRecord& r, const LinkingMatrix& base) {
  LinkingMatrix m = LinkingMatrix::zero(base.n);
  for (std::size_t i = 0; i < base.n; ++i)
    for (std::size_t j = 0; j < base.n; ++j) {
      if (i == j) continue;
      m.entries[i][j] = r.ambient.value() * r.orients[i].value() * r.orients[j].value() *
                        base.entries[r.comp_ids[i]][r.comp_ids[j]];
    }
  return m;
}

LinkingMatrix hopf() { return LinkingMatrix::from_entries({{0, 1}, {1, 0}}); }

LinkingMatrix chain3() {
  return LinkingMatrix::from_entries({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
}

}  // namespace

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(LinkingMatrix::from_entries({{1, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinkingMatrix::from_entries({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinkingMatrix::from_entries({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(stabilizer(gamma_group(3), LinkingMatrix::zero(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(act_on_linking_matrix(whitten_identity(2), LinkingMatrix::zero(3)),
                  std::invalid_argument);
}

TEST_CASE("matrix action basics") {
  SECTION("identity element fixes every matrix") {
    std::mt19937_64 rng(oracles::test_seed());
    LinkingMatrix m = random_matrix(3, rng);
    CHECK(act_on_linking_matrix(whitten_identity(3), m) == m);
  }
  SECTION("the mirror element negates the Hopf matrix") {
    WhittenElement mirror;
    mirror.eta = Sign::minus();
    mirror.eps = {Sign::plus(), Sign::plus()};
    mirror.rho = Perm(2);
    LinkingMatrix m = act_on_linking_matrix(mirror, hopf());
    CHECK(m.entries[0][1] == -1);
    CHECK(m.entries[1][0] == -1);
  }
}

TEST_CASE("matrix action law against the link-record transformer") {
  std::mt19937_64 rng(oracles::test_seed());
  FiniteGroup g3 = gamma_group(3);
  LinkingMatrix base = random_matrix(3, rng);
  for (int i = 0; i < 500; ++i) {
    WhittenElement s = random_element(g3, rng);
    WhittenElement t = random_element(g3, rng);
    LinkingMatrix m = random_matrix(3, rng);
    // Composition law.
    REQUIRE(act_on_linking_matrix(gamma_mul(s, t), m) ==
            act_on_linking_matrix(s, act_on_linking_matrix(t, m)));
    // Independent route: transform a link record, then read its matrix.
    LinkRecord r = link_record_identity(3);
    REQUIRE(matrix_of_record(act_on_link(s, r), base) ==
            act_on_linking_matrix(s, matrix_of_record(r, base)));
  }
}

TEST_CASE("stabilizers of benchmark matrices") {
  SECTION("the zero matrix is fixed by the whole group") {
    FiniteGroup g2 = gamma_group(2);
    CHECK(stabilizer(g2, LinkingMatrix::zero(2)).order == 16);
  }
  SECTION("the Hopf matrix stabilizer has order eight with sign condition") {
    FiniteGroup g2 = gamma_group(2);
    SubgroupRecord stab = stabilizer(g2, hopf());
    CHECK(stab.order == 8);
    // Membership is exactly eta * eps1 * eps2 = +1.
    std::set<std::uint32_t> members(stab.members.begin(), stab.members.end());
    for (std::uint32_t i = 0; i < g2.order(); ++i) {
      WhittenElement s = whitten_from_perm(g2.element(i));
      bool predicted = (s.eta * s.eps[0] * s.eps[1]) == Sign::plus();
      CHECK(members.count(i) == (predicted ? 1u : 0u));
    }
  }
  SECTION("the three-component chain restricts the permutation image") {
    FiniteGroup g3 = gamma_group(3);
    SubgroupRecord stab = stabilizer(g3, chain3());
    std::set<Perm> images;
    for (std::uint32_t i : stab.members)
      images.insert(whitten_from_perm(g3.element(i)).rho);
    std::set<Perm> expected{Perm(3), Perm::from_cycles(3, {{0, 2}})};
    CHECK(images == expected);
  }
  SECTION("stabilizers are closed subgroups") {
    std::mt19937_64 rng(oracles::test_seed());
    FiniteGroup g3 = gamma_group(3);
    for (int i = 0; i < 5; ++i) {
      SubgroupRecord stab = stabilizer(g3, random_matrix(3, rng));
      CHECK(detail::is_closed_subgroup(g3.table(), stab.members));
    }
  }
}

TEST_CASE("stabilizers transform equivariantly") {
  std::mt19937_64 rng(oracles::test_seed());
  FiniteGroup g3 = gamma_group(3);
  const CayleyTable& t = g3.table();
  for (int trial = 0; trial < 10; ++trial) {
    LinkingMatrix m = random_matrix(3, rng);
    WhittenElement s = random_element(g3, rng);
    std::uint32_t si = *g3.index_of(whitten_to_perm(s));
    IndexVec lhs = stabilizer(g3, act_on_linking_matrix(s, m)).members;
    IndexVec rhs;
    for (std::uint32_t x : stabilizer(g3, m).members)
      rhs.push_back(t.conjugate(si, x));
    std::sort(rhs.begin(), rhs.end());
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("the all-reversal mirror element stabilizes only vanishing matrices") {
  // (-1, (-1,...,-1), e) scales every off-diagonal entry by -1, so it
  // stabilizes a matrix exactly when all entries are zero.
  std::mt19937_64 rng(oracles::test_seed());
  WhittenElement flip_all;
  flip_all.eta = Sign::minus();
  flip_all.eps = std::vector<Sign>(3, Sign::minus());
  flip_all.rho = Perm(3);
  for (int i = 0; i < 50; ++i) {
    LinkingMatrix m = random_matrix(3, rng);
    bool zero = m == LinkingMatrix::zero(3);
    CHECK(stabilizes(flip_all, m) == zero);
  }
  CHECK(stabilizes(flip_all, LinkingMatrix::zero(3)));
}

TEST_CASE("permutation upper bounds") {
  FiniteGroup g2 = gamma_group(2);
  FiniteGroup g3 = gamma_group(3);
  CHECK(sym_upper_bound(g2, LinkingMatrix::zero(2)).order() == 2);
  CHECK(sym_upper_bound(g3, LinkingMatrix::zero(3)).order() == 6);
  CHECK(sym_upper_bound(g2, hopf()).order() == 2);
  FiniteGroup chain_bound = sym_upper_bound(g3, chain3());
  CHECK(chain_bound.order() == 2);
  CHECK(chain_bound.index_of(Perm::from_cycles(3, {{0, 2}})).has_value());
}
