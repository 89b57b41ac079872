#include <doctest.h>

#include <numeric>
#include <random>

#include <json.hpp>

#include "hookvert/brauer.hpp"
#include "hookvert/constructions.hpp"
#include "hookvert/hook_module.hpp"
#include "hookvert/suites.hpp"

using namespace hookvert;

namespace {

std::vector<long> random_in(const Subspace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, s.p() - 1);
  std::vector<long> coords(s.dim());
  for (auto& c : coords) c = dist(rng);
  return s.from_coordinates(coords);
}

}  // namespace

TEST_SUITE("brauer") {

TEST_CASE("fixed points of the trivial group are everything") {
  const NaturalPermModule m(3, 6);
  CHECK(fixed_points(m, PermGroup::trivial(6)).dim() == 6);
}

TEST_CASE("e lies in the P_n-fixed space of D") {
  const HookModule d(3, 6, 2);
  const Subspace fixed = fixed_points(d, sylow_subgroup_sn(6, 3).group());
  CHECK(fixed.contains(d.special_e().coeffs));
}

TEST_CASE("fixed space of E(1,1) on the natural module of S_12") {
  const NaturalPermModule m(3, 12);
  const PermGroup e = elem_abelian_subgroup_sn(12, 3, {1, 1}).group();
  const Subspace fixed = fixed_points(m, e);
  CHECK(fixed.dim() == 2);  // orbit sums of {1,2,3} and {4,…,12}
  std::vector<long> orbit1(12, 0), orbit2(12, 0);
  for (int i = 1; i <= 3; ++i) orbit1[i - 1] = 1;
  for (int i = 4; i <= 12; ++i) orbit2[i - 1] = 1;
  CHECK(fixed.contains(orbit1));
  CHECK(fixed.contains(orbit2));
}

TEST_CASE("relative trace from the whole group is the identity map") {
  const NaturalPermModule m(3, 6);
  const PermGroup p = PermGroup(6, {Permutation::parse("(1,2,3)", 6)});
  std::mt19937_64 rng(101);
  const std::vector<long> u = random_in(fixed_points(m, p), rng);
  CHECK(rel_trace(m, p, p, u) == u);
}

TEST_CASE("trace from the trivial subgroup is the orbit sum") {
  const NaturalPermModule m(3, 5);
  const PermGroup p(5, {Permutation::parse("(1,2,3)", 5)});
  std::vector<long> omega1{1, 0, 0, 0, 0};
  CHECK(rel_trace(m, p, PermGroup::trivial(5), omega1) ==
        std::vector<long>{1, 1, 1, 0, 0});
}

TEST_CASE("traces are independent of the transversal and land in M^P") {
  const HookModule d(3, 12, 2);
  const PermGroup e = elem_abelian_subgroup_sn(12, 3, {1, 1}).group();
  const auto maximals = maximal_subgroups(e);
  const Subspace fixed_e = fixed_points(d, e);
  std::mt19937_64 rng(103);
  for (std::size_t i = 0; i < 3; ++i) {
    const PermGroup& q = maximals[i];
    const Subspace fixed_q = fixed_points(d, q);
    const std::vector<long> u = random_in(fixed_q, rng);
    const auto t1 = left_transversal(e, q);
    const auto t2 = left_transversal_seeded(e, q, 12345);
    const auto trace1 = rel_trace_over(d, q, t1, u);
    CHECK(trace1 == rel_trace_over(d, q, t2, u));
    CHECK(fixed_e.contains(trace1));
  }
}

TEST_CASE("a non-fixed vector is rejected") {
  const NaturalPermModule m(3, 5);
  const PermGroup p(5, {Permutation::parse("(1,2,3)", 5)});
  std::vector<long> omega1{1, 0, 0, 0, 0};  // moved by the 3-cycle
  CHECK_THROWS_AS(rel_trace(m, p, p, omega1), std::invalid_argument);
}

TEST_CASE("trace transitivity through a chain R < Q < P") {
  // P = P_9, Q = its base group, R = ⟨g_1⟩
  const PermGroup p9 = sylow_tower(3, 2);
  const Permutation g1 = tower_generator(3, 1, 2);
  const Permutation g2 = tower_generator(3, 2, 2);
  std::vector<Permutation> base_gens;
  for (int i = 0; i < 3; ++i) base_gens.push_back(g1.conjugated_by(g2.power(i)));
  const PermGroup base(9, base_gens);
  const PermGroup r(9, {g1});
  const NaturalPermModule m(3, 9);
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<long> u = random_in(fixed_points(m, r), rng);
    const auto direct = rel_trace(m, p9, r, u);
    const auto composed = rel_trace(m, p9, base, rel_trace(m, base, r, u));
    CHECK(direct == composed);
  }
}

TEST_CASE("Brauer quotient of the trivial module is one-dimensional") {
  const TrivialModule m(3, 9);
  const auto analysis = brauer_quotient(m, sylow_tower(3, 2));
  CHECK(analysis.dim_quotient() == 1);
}

TEST_CASE("permutation-module Brauer dimension counts fixed letters") {
  // fixed instances first
  {
    const NaturalPermModule m(3, 12);
    const PermGroup e = elem_abelian_subgroup_sn(12, 3, {1, 1}).group();
    CHECK(brauer_quotient(m, e).dim_quotient() == 0);
  }
  {
    const NaturalPermModule m(3, 5);
    const PermGroup p(5, {Permutation::parse("(1,2,3)", 5)});
    CHECK(brauer_quotient(m, p).dim_quotient() == 2);  // letters 4, 5
  }
  // randomized: p-subgroups assembled from random Sylow elements
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 8; ++trial) {
    const long p = std::vector<long>{2, 3}[rng() % 2];
    const int n = 4 + static_cast<int>(rng() % 6);
    const PermGroup sylow = sylow_subgroup_sn(n, p).group();
    if (sylow.is_trivial()) continue;
    const auto& elems = sylow.elements();
    const PermGroup sub(n, {elems[rng() % elems.size()],
                            elems[rng() % elems.size()]});
    if (sub.order() > 81) continue;
    const NaturalPermModule m(p, n);
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 1);
    CHECK(brauer_quotient(m, sub).dim_quotient() ==
          common_fixed_points(sub, letters).size());
  }
}

TEST_CASE("the Prop 2.2 certificate on the hook module at (3,12)") {
  const HookModule d(3, 12, 2);
  const PermGroup e = elem_abelian_subgroup_sn(12, 3, {1, 1}).group();
  const auto analysis = brauer_quotient(d, e);
  CHECK(prop22_certificate(d, d.special_e_position(), analysis));
  CHECK(analysis.dim_quotient() >= 1);
  CHECK(analysis.dim_quotient() ==
        analysis.fixed.dim() - analysis.trace_sum.dim());
}

TEST_CASE("certificate for the natural module at a fixed letter") {
  const NaturalPermModule m(3, 4);
  const PermGroup p(4, {Permutation::parse("(1,2,3)", 4)});
  const auto analysis = brauer_quotient(m, p);
  // ω_4 is fixed and the only maximal (trivial) trace image is the span of
  // ω_1+ω_2+ω_3, which misses the ω_4 coordinate
  CHECK(prop22_certificate(m, 3, analysis));
  CHECK(analysis.dim_quotient() >= 1);
  // ω_1 is not fixed, so condition (i) fails
  CHECK_FALSE(prop22_certificate(m, 0, analysis));
}

TEST_CASE("P acts trivially on the Brauer quotient") {
  const HookModule d(3, 12, 2);
  const PermGroup e = elem_abelian_subgroup_sn(12, 3, {1, 1}).group();
  const auto analysis = brauer_quotient(d, e);
  CHECK(p_acts_trivially_on_quotient(d, e, analysis));

  const NaturalPermModule m(3, 5);
  const PermGroup p(5, {Permutation::parse("(1,2,3)", 5)});
  const auto analysis2 = brauer_quotient(m, p);
  CHECK(p_acts_trivially_on_quotient(m, p, analysis2));
}

TEST_CASE("report serialization") {
  const HookModule d(3, 12, 2);
  const PermGroup e = elem_abelian_subgroup_sn(12, 3, {1, 1}).group();
  const auto analysis = brauer_quotient(d, e);
  const auto report = make_brauer_report(
      d, e, analysis,
      std::make_pair(std::vector<int>{2, 3},
                     prop22_certificate(d, d.special_e_position(),
                                        analysis)));
  const auto j = report.to_json();
  CHECK(j.at("module") == "D[(10,1^2)]");
  CHECK(j.at("dim_fixed") == analysis.fixed.dim());
  CHECK(j.at("trace_images").size() == 13);
  CHECK(j.at("certificate").at("verdict") == true);
  CHECK(j.at("certificate").at("b0") == nlohmann::json({2, 3}));
}

}  // TEST_SUITE
