#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "hookvert/constructions.hpp"
#include "hookvert/perm_group.hpp"

using namespace hookvert;

TEST_SUITE("perm_group") {

TEST_CASE("closure enumerates S_3") {
  const PermGroup s3 = PermGroup(3, {Permutation::parse("(1,2)", 3),
                                     Permutation::parse("(1,2,3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.contains(Permutation::parse("(1,3)", 3)));
}

TEST_CASE("enumeration respects the budget") {
  const PermGroup s5 = PermGroup::symmetric(5);
  CHECK_THROWS_AS(s5.elements(100), BudgetExceeded);
}

TEST_CASE("support of P_9 is the full point set") {
  const PermGroup p9 = sylow_tower(3, 2);
  CHECK(p9.support() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("left transversals") {
  const PermGroup p3 = sylow_tower(3, 1);
  CHECK(left_transversal(p3, PermGroup::trivial(3)).size() == 3);

  // base group of P_9: the three block copies of P_3
  const Permutation g1 = tower_generator(3, 1, 2);
  const Permutation g2 = tower_generator(3, 2, 2);
  std::vector<Permutation> base_gens;
  for (int i = 0; i < 3; ++i)
    base_gens.push_back(g1.conjugated_by(g2.power(i)));
  const PermGroup base(9, base_gens);
  CHECK(base.order() == 27);
  const PermGroup p9 = sylow_tower(3, 2);
  CHECK(left_transversal(p9, base).size() == 3);

  // maximal subgroup of an elementary abelian group: {1, g, g^2} works for
  // any g outside
  const PermGroup e27 = elem_abelian_tower(3, 3);
  const auto maximals = maximal_subgroups(e27);
  REQUIRE(!maximals.empty());
  const auto reps = left_transversal(e27, maximals.front());
  CHECK(reps.size() == 3);

  CHECK_THROWS_AS(left_transversal(p3, PermGroup(3, {Permutation::parse(
                                            "(1,2)", 3)})),
                  std::invalid_argument);
}

TEST_CASE("transversals cover every coset exactly once") {
  const PermGroup p9 = sylow_tower(3, 2);
  const auto subgroups = all_subgroups(p9);
  std::mt19937_64 rng(71);
  for (std::uint64_t seed : {1ull, 2ull}) {
    const PermGroup& q = subgroups[rng() % subgroups.size()];
    const auto reps = left_transversal_seeded(p9, q, seed);
    CHECK(reps.size() * q.order() == p9.order());
    std::set<Permutation> covered;
    for (const auto& x : reps)
      for (const auto& h : q.elements()) covered.insert(x * h);
    CHECK(covered.size() == p9.order());
  }
}

TEST_CASE("maximal subgroups via the Frattini quotient") {
  CHECK(maximal_subgroups(elem_abelian_tower(3, 3)).size() == 13);
  for (const auto& m : maximal_subgroups(elem_abelian_tower(3, 3)))
    CHECK(m.order() == 9);

  const auto of_cyclic = maximal_subgroups(sylow_tower(3, 1));
  REQUIRE(of_cyclic.size() == 1);
  CHECK(of_cyclic.front().is_trivial());

  // dihedral of order 8: Frattini quotient is 2x2
  CHECK(maximal_subgroups(sylow_tower(2, 2)).size() == 3);

  CHECK_THROWS_AS(maximal_subgroups(PermGroup::symmetric(3)),
                  std::invalid_argument);
}

TEST_CASE("subgroup lattice by cyclic extension") {
  CHECK(all_subgroups(sylow_tower(3, 1)).size() == 2);
  CHECK(all_subgroups(elem_abelian_tower(2, 2)).size() == 5);
  const auto of_e9 = all_subgroups(elem_abelian_tower(3, 2));
  CHECK(of_e9.size() == 6);  // 1 + 4 + 1
  CHECK(all_subgroups(sylow_tower(2, 2)).size() == 10);  // dihedral of order 8
  // 1 + 13 + 13 + 1 flats of GF(3)^3
  CHECK(all_subgroups(elem_abelian_tower(3, 3)).size() == 28);

  // every reported subgroup is closed and contained in P
  const PermGroup p9 = sylow_tower(3, 2);
  const auto lattice = all_subgroups(p9);
  for (const auto& s : lattice) CHECK(s.is_subgroup_of(p9));

  // lattice sizes are budgeted
  Budget tight;
  tight.subgroup_lattice_odd = 9;
  CHECK_THROWS_AS(all_subgroups(p9, tight), BudgetExceeded);
  CHECK_THROWS_AS(all_subgroups(sylow_tower(2, 5)), BudgetExceeded);
}

TEST_CASE("regularity") {
  const std::vector<int> nine{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(is_regular_on(elem_abelian_tower(3, 2), nine));
  CHECK_FALSE(is_regular_on(sylow_tower(3, 2), nine));
  const std::vector<int> one{1};
  CHECK(is_regular_on(PermGroup::trivial(1), one));
}

TEST_CASE("elementary abelian predicate") {
  CHECK(is_elementary_abelian(elem_abelian_tower(3, 2), 3));
  CHECK_FALSE(is_elementary_abelian(sylow_tower(3, 2), 3));
  CHECK_FALSE(is_elementary_abelian(elem_abelian_tower(3, 2), 2));
}

TEST_CASE("common fixed points") {
  const PermGroup h(5, {Permutation::parse("(1,2,3)", 5)});
  const std::vector<int> pts{1, 2, 3, 4, 5};
  CHECK(common_fixed_points(h, pts) == std::vector<int>{4, 5});
}

TEST_CASE("conjugating element search") {
  const PermGroup a(9, {Permutation::parse("(1,2,3)", 9)});
  const PermGroup b(9, {Permutation::parse("(4,5,6)", 9)});
  const PermGroup p9 = sylow_tower(3, 2);
  CHECK(conjugating_element(a, b, p9.elements()).has_value());
  const PermGroup c(9, {Permutation::parse("(1,2,3)(4,5,6)", 9)});
  CHECK_FALSE(conjugating_element(a, c, p9.elements()).has_value());
}

TEST_CASE("from_elements reconstructs the group") {
  const PermGroup e9 = elem_abelian_tower(3, 2);
  const PermGroup rebuilt = PermGroup::from_elements(9, e9.elements());
  CHECK(rebuilt.same_elements_as(e9));
  CHECK(rebuilt.generators().size() <= 2);
}

TEST_CASE("group json round trip") {
  const PermGroup e9 = elem_abelian_tower(3, 2);
  const auto j = e9.to_json();
  CHECK(j.at("degree") == 9);
  CHECK(PermGroup::from_json(j).same_elements_as(e9));
}

}  // TEST_SUITE
