#include "hookvert/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hookvert/brauer.hpp"
#include "hookvert/subspace.hpp"

namespace hookvert {

namespace {

using Clock = std::chrono::steady_clock;

long sign_pow(int exponent, long p) { return exponent % 2 == 0 ? 1 : p - 1; }

std::vector<int> base_p_digits(int n, long p) {
  std::vector<int> digits;
  for (int rest = n; rest > 0; rest /= static_cast<int>(p))
    digits.push_back(rest % static_cast<int>(p));
  return digits;
}

std::vector<long> random_vector_in(const Subspace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, s.p() - 1);
  std::vector<long> coords(s.dim());
  for (auto& c : coords) c = dist(rng);
  return s.from_coordinates(coords);
}

// coordinates of `target` against the rows of `basis_rows` (assumed
// independent); nullopt when target is outside the row space
std::optional<std::vector<long>> solve_against_rows(const FpMatrix& basis_rows,
                                                    std::span<const long> target) {
  const long p = basis_rows.p();
  const std::size_t k = basis_rows.rows();
  const std::size_t n = basis_rows.cols();
  FpMatrix aug(p, n, k + 1);  // columns: basis vectors, then target
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(j, i) = basis_rows(i, j);
  for (std::size_t j = 0; j < n; ++j) aug(j, k) = target[j];
  const FpMatrix red = aug.rref();
  std::vector<long> x(k, 0);
  std::size_t col = 0;
  for (std::size_t r = 0; r < red.rows(); ++r) {
    while (col < k + 1 && red(r, col) == 0) ++col;
    if (col == k) return std::nullopt;  // pivot in the target column
    if (col > k) break;
    x[col] = red(r, k);
  }
  return x;
}

struct SuiteRun {
  VerifySuiteResult result;

  explicit SuiteRun(std::string name, const SuiteParams& params) {
    result.suite = std::move(name);
    result.parameters = {{"p", params.p},
                         {"n", params.n},
                         {"d", params.d},
                         {"m", params.m},
                         {"samples", params.samples},
                         {"seed", params.seed}};
  }

  void check(bool ok, const std::string& what, nlohmann::json witness) {
    ++result.checks_run;
    if (!ok) result.failures.push_back({what, std::move(witness)});
  }
};

// --------------------------------------------------------------------------
// lemma-4.2: the action of alpha = (1,…,p) and of p-cycles beta disjoint
// from {1,…,p} on the basis e_2,…,e_{n-1}, checked exhaustively against the
// stated table, plus agreement of the r = 1 action with the
// permutation-module quotient oracle.
// --------------------------------------------------------------------------

// Oracle for the r = 1 action: act on ω-space, express the image of
// ω_i - ω_1 against the basis {f_2,…,f_{n-1}, all-ones} of the sum-zero
// submodule, and drop the all-ones coordinate.
FpMatrix quotient_oracle_matrix(long p, int n, const Permutation& sigma) {
  FpMatrix basis(p, n - 1, n);
  for (int i = 2; i <= n - 1; ++i) {
    basis(i - 2, 0) = p - 1;
    basis(i - 2, i - 1) = 1;
  }
  for (int j = 0; j < n; ++j) basis(n - 2, j) = 1;
  FpMatrix out(p, n - 2, n - 2);
  for (int i = 2; i <= n - 1; ++i) {
    std::vector<long> image(n, 0);
    image[sigma(i) - 1] = fp_add(image[sigma(i) - 1], 1, p);
    image[sigma(1) - 1] = fp_sub(image[sigma(1) - 1], 1, p);
    const auto coords = solve_against_rows(basis, image);
    if (!coords) throw std::logic_error("oracle image escapes the submodule");
    for (int row = 0; row < n - 2; ++row) out(row, i - 2) = (*coords)[row];
  }
  return out;
}

FpMatrix natural_action_matrix(const HookModule& d1, const Permutation& sigma) {
  const int n = d1.degree();
  FpMatrix m(d1.prime(), n - 2, n - 2);
  for (int i = 2; i <= n - 1; ++i) {
    const auto image = d1.natural_image(sigma, i);
    for (int row = 0; row < n - 2; ++row) m(row, i - 2) = image[row];
  }
  return m;
}

VerifySuiteResult suite_lemma_4_2(const SuiteParams& params,
                                  const Budget& budget) {
  const long p = params.p;
  const int n = params.n;
  SuiteRun run("lemma-4.2", params);
  const HookModule d1(p, n, 1);

  auto unit = [&](int j) {  // e_j as a dense vector
    std::vector<long> v(n - 2, 0);
    v[j - 2] = 1;
    return v;
  };
  auto neg_sum_all = [&] {  // -(e_2 + ⋯ + e_{n-1})
    return std::vector<long>(n - 2, p - 1);
  };
  auto minus = [&](std::vector<long> a, const std::vector<long>& b) {
    for (int j = 0; j < n - 2; ++j) a[j] = fp_sub(a[j], b[j], p);
    return a;
  };

  // part (a): alpha = (1,…,p)
  std::vector<int> alpha_points(p);
  std::iota(alpha_points.begin(), alpha_points.end(), 1);
  const Permutation alpha = Permutation::cycle(alpha_points, n);
  for (int i = 2; i <= n - 1; ++i) {
    std::vector<long> expected;
    if (i <= p - 1)
      expected = minus(unit(i + 1), unit(2));
    else if (i == p)
      expected = minus(std::vector<long>(n - 2, 0), unit(2));
    else
      expected = minus(unit(i), unit(2));
    run.check(d1.natural_image(alpha, i) == expected, "alpha action on e_i",
              {{"i", i}});
  }

  // parts (b) and (c): p-cycles supported in {p+1,…,n}
  std::vector<std::vector<int>> betas;
  {
    // (b): all p-subsets of {p+1,…,n-1} in all cyclic orders
    std::vector<int> pool;
    for (int x = static_cast<int>(p) + 1; x <= n - 1; ++x) pool.push_back(x);
    std::vector<int> subset(p);
    auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
      if (depth == static_cast<int>(p)) {
        // fix subset[0] first, permute the rest: distinct cyclic orders
        std::vector<int> rest(subset.begin() + 1, subset.end());
        std::sort(rest.begin(), rest.end());
        do {
          std::vector<int> cyc{subset[0]};
          cyc.insert(cyc.end(), rest.begin(), rest.end());
          betas.push_back(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
        return;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        subset[depth] = pool[i];
        self(self, i + 1, depth + 1);
      }
    };
    if (static_cast<int>(pool.size()) >= p) rec(rec, 0, 0);
    // (c): all arrangements (x_1,…,x_{p-1}, n) from {p+1,…,n-1}
    std::vector<int> arrangement;
    auto rec_c = [&](auto&& self) -> void {
      if (static_cast<int>(arrangement.size()) == p - 1) {
        std::vector<int> cyc = arrangement;
        cyc.push_back(n);
        betas.push_back(cyc);
        return;
      }
      for (int x : pool) {
        if (std::find(arrangement.begin(), arrangement.end(), x) !=
            arrangement.end())
          continue;
        arrangement.push_back(x);
        self(self);
        arrangement.pop_back();
      }
    };
    rec_c(rec_c);
  }

  for (const auto& word : betas) {
    const Permutation beta = Permutation::cycle(word, n);
    const bool has_n = word.back() == n;
    const std::set<int> supp(word.begin(), word.end());
    for (int i = 2; i <= n - 1; ++i) {
      std::vector<long> expected;
      if (!supp.count(i)) {
        expected = unit(i);
      } else if (!has_n) {
        expected = unit(beta(i));
      } else if (i == word[p - 2]) {  // i = x_{p-1}, beta(i) = n
        expected = neg_sum_all();
      } else {
        expected = unit(beta(i));
      }
      run.check(d1.natural_image(beta, i) == expected, "beta action on e_i",
                {{"beta", beta.cycle_string()}, {"i", i}});
    }
  }

  // quotient-module oracle on the Sylow generators, alpha, and random sigma
  std::vector<Permutation> oracle_elements{alpha};
  for (const auto& g : sylow_subgroup_sn(n, p).generators())
    oracle_elements.push_back(g);
  std::mt19937_64 rng(params.seed);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    oracle_elements.push_back(Permutation::from_images(images));
  }
  for (const auto& sigma : oracle_elements) {
    run.check(
        natural_action_matrix(d1, sigma) == quotient_oracle_matrix(p, n, sigma),
        "r=1 action matches the quotient-module oracle",
        {{"sigma", sigma.cycle_string()}});
  }
  (void)budget;
  return run.result;
}

// --------------------------------------------------------------------------
// lemma-4.3: the reordering signs of the wedge basis.
// --------------------------------------------------------------------------

VerifySuiteResult suite_lemma_4_3(const SuiteParams& params, const Budget&) {
  const long p = params.p;
  const int n = params.n;
  SuiteRun run("lemma-4.3", params);
  const int pi = static_cast<int>(p);

  auto hat_tuple = [&](int k, int x) {  // ê_k ∧ e_x, sorted form
    std::vector<int> t;
    for (int j = 2; j <= pi; ++j)
      if (j != k) t.push_back(j);
    t.push_back(x);
    return t;
  };
  auto check_identity = [&](std::vector<int> raw, int expected_sign,
                            std::vector<int> expected_sorted,
                            const std::string& which, nlohmann::json witness) {
    const auto norm = wedge_normalize(raw);
    bool ok = norm.has_value() && norm->first == expected_sign &&
              norm->second.indices == expected_sorted;
    run.check(ok, which, std::move(witness));
  };

  for (int k = 2; k <= pi; ++k) {
    const int s_k = segment_length(k + 1, pi);
    for (int x = pi + 1; x <= n - 1; ++x) {
      // (a) e_{k+1}∧⋯∧e_p∧e_2∧⋯∧e_{k-1}∧e_x = (-1)^{s(k+1,p)(k-2)} ê_k∧e_x
      std::vector<int> raw;
      for (int j = k + 1; j <= pi; ++j) raw.push_back(j);
      for (int j = 2; j <= k - 1; ++j) raw.push_back(j);
      raw.push_back(x);
      check_identity(raw, (s_k * (k - 2)) % 2 == 0 ? 1 : -1, hat_tuple(k, x),
                     "4.3(a)", {{"k", k}, {"x", x}});
    }
    {
      // (b) ê_k∧e_k = (-1)^{s(k+1,p)} e
      std::vector<int> raw;
      for (int j = 2; j <= pi; ++j)
        if (j != k) raw.push_back(j);
      raw.push_back(k);
      std::vector<int> e_tuple;
      for (int j = 2; j <= pi; ++j) e_tuple.push_back(j);
      check_identity(raw, s_k % 2 == 0 ? 1 : -1, e_tuple, "4.3(b)",
                     {{"k", k}});
    }
    for (int l = k + 1; l <= pi; ++l) {
      const int s_l = segment_length(l + 1, pi);
      for (int x = pi + 1; x <= n - 1; ++x) {
        std::vector<int> stem;
        for (int j = 2; j <= pi; ++j)
          if (j != k && j != l) stem.push_back(j);
        // (c) ê_{k,l}∧e_x∧e_l = (-1)^{s(l+1,p)+1} ê_k∧e_x
        std::vector<int> raw_c = stem;
        raw_c.push_back(x);
        raw_c.push_back(l);
        check_identity(raw_c, (s_l + 1) % 2 == 0 ? 1 : -1, hat_tuple(k, x),
                       "4.3(c)", {{"k", k}, {"l", l}, {"x", x}});
        // (d) ê_{k,l}∧e_x∧e_k = (-1)^{s(k+1,p)} ê_l∧e_x
        std::vector<int> raw_d = stem;
        raw_d.push_back(x);
        raw_d.push_back(k);
        check_identity(raw_d, s_k % 2 == 0 ? 1 : -1, hat_tuple(l, x), "4.3(d)",
                       {{"k", k}, {"l", l}, {"x", x}});
      }
    }
  }
  return run.result;
}

// --------------------------------------------------------------------------
// cor-4.4: e = e_2∧⋯∧e_p is fixed by every generator of P_n.
// --------------------------------------------------------------------------

VerifySuiteResult suite_cor_4_4(const SuiteParams& params, const Budget&) {
  SuiteRun run("cor-4.4", params);
  const HookModule d(params.p, params.n, static_cast<int>(params.p) - 1);
  const WedgeVector e = d.special_e();
  for (const auto& g : sylow_subgroup_sn(params.n, params.p).generators()) {
    run.check(d.act(g, e) == e, "e is fixed by a Sylow generator",
              {{"generator", g.cycle_string()}});
  }
  return run.result;
}

// --------------------------------------------------------------------------
// lemma-4.5: alternating-sum relations for vectors fixed by sigma ∈ E with
// support in {p+1,…,n} containing n.
// --------------------------------------------------------------------------

GroupDecomposition regular_E_impl(int n, long p) {
  const auto digits = base_p_digits(n, p);
  if (digits.size() < 3 || digits[0] != 0 || digits[1] != 1)
    throw std::invalid_argument(
        "n must have p-adic expansion p + sum_{i>=2} n_i p^i");
  std::vector<int> m(digits.begin() + 1, digits.end());
  return elem_abelian_subgroup_sn(n, p, m);
}

// cycle word (x_1^1,…,x_p^1)…(x_1^q,…,x_p^q) with x_p^q = n
std::vector<std::vector<int>> cycle_word_last_n(const Permutation& sigma,
                                                int n) {
  auto word = sigma.cycles();
  const auto it =
      std::find_if(word.begin(), word.end(), [&](const auto& c) {
        return std::find(c.begin(), c.end(), n) != c.end();
      });
  if (it == word.end()) throw std::invalid_argument("n not in support");
  std::rotate(it, it + 1, word.end());  // n's cycle goes last
  auto& last = word.back();
  while (last.back() != n)
    std::rotate(last.begin(), last.begin() + 1, last.end());
  return word;
}

VerifySuiteResult suite_lemma_4_5(const SuiteParams& params,
                                  const Budget& budget) {
  const long p = params.p;
  const int n = params.n;
  SuiteRun run("lemma-4.5", params);
  const HookModule d(p, n, static_cast<int>(p) - 1);
  const auto E = regular_E_impl(n, p);

  // sigma ranges over the nontrivial elements of the level >= 2 part
  std::vector<Permutation> primed_gens;
  for (const auto& f : E.factors)
    if (f.level >= 2)
      for (const auto& g : f.generators) primed_gens.push_back(g);
  const PermGroup e_prime(n, primed_gens);

  std::mt19937_64 rng(params.seed);
  for (const auto& sigma : e_prime.elements(budget.max_group_order)) {
    if (sigma.is_identity()) continue;
    const auto supp = sigma.support();
    if (std::find(supp.begin(), supp.end(), n) == supp.end()) continue;
    const auto word = cycle_word_last_n(sigma, n);
    const std::size_t q = word.size();
    const PermGroup cyclic(n, {sigma});
    const Subspace fixed = fixed_points(d, cyclic);

    for (int sample = 0; sample < params.samples; ++sample) {
      const WedgeVector u{random_vector_in(fixed, rng)};
      // (a) Σ_k (-1)^k λ_{k̂, x_i^q} = 0 for i < p
      for (int i = 1; i <= static_cast<int>(p) - 1; ++i) {
        long acc = 0;
        for (int k = 2; k <= static_cast<int>(p); ++k)
          acc = fp_add(acc,
                       fp_mul(sign_pow(k, p),
                              lambda_hat(d, u, k, word[q - 1][i - 1]), p),
                       p);
        run.check(acc == 0, "4.5(a) alternating sum vanishes",
                  {{"sigma", sigma.cycle_string()},
                   {"i", i},
                   {"sample", sample}});
      }
      // (b) the alternating sum is constant along every other cycle
      for (std::size_t s = 0; s + 1 < q; ++s) {
        auto altsum = [&](int x) {
          long acc = 0;
          for (int k = 2; k <= static_cast<int>(p); ++k)
            acc = fp_add(
                acc, fp_mul(sign_pow(k + 1, p), lambda_hat(d, u, k, x), p), p);
          return acc;
        };
        const long first = altsum(word[s][0]);
        for (int i = 1; i < static_cast<int>(p); ++i) {
          run.check(altsum(word[s][i]) == first,
                    "4.5(b) alternating sums agree along a cycle",
                    {{"sigma", sigma.cycle_string()},
                     {"cycle", s + 1},
                     {"i", i + 1},
                     {"sample", sample}});
        }
      }
    }
  }
  return run.result;
}

// --------------------------------------------------------------------------
// lemma-4.6: for every maximal P < E and u ∈ D^P, the coefficient of e in
// Tr_P^E(u) vanishes.
// --------------------------------------------------------------------------

VerifySuiteResult suite_lemma_4_6(const SuiteParams& params,
                                  const Budget& budget) {
  const long p = params.p;
  const int n = params.n;
  SuiteRun run("lemma-4.6", params);
  const HookModule d(p, n, static_cast<int>(p) - 1);
  const PermGroup E = regular_E_impl(n, p).group();
  const auto maximals = maximal_subgroups(E, budget);

  std::mt19937_64 rng(params.seed);
  for (std::size_t idx = 0; idx < maximals.size(); ++idx) {
    const auto& P = maximals[idx];
    const Subspace fixed = fixed_points(d, P);
    const auto transversal = left_transversal(E, P, budget.max_group_order);
    for (int sample = 0; sample < params.samples; ++sample) {
      const std::vector<long> u = random_vector_in(fixed, rng);
      const WedgeVector traced{rel_trace_over(d, P, transversal, u)};
      const long coeff = lambda_e(d, traced);
      run.check(coeff == 0, "coefficient of e in Tr_P^E(u) is zero",
                {{"subgroup_index", idx},
                 {"sample", sample},
                 {"coefficient", coeff}});
    }
  }
  return run.result;
}

// --------------------------------------------------------------------------
// lemma-3.6: P_{p^2} has exactly p subgroups S_n-conjugate to P_p, pairwise
// P_{p^2}-conjugate. Conjugacy to the cyclic P_p is decided by cycle type.
// --------------------------------------------------------------------------

bool generated_by_single_p_cycle(const PermGroup& S, long p,
                                 std::uint64_t enum_budget) {
  if (S.order(enum_budget) != static_cast<std::uint64_t>(p)) return false;
  for (const auto& x : S.elements(enum_budget)) {
    if (x.is_identity()) continue;
    const auto type = x.cycle_type();
    return type.size() == 1 && type[0] == static_cast<int>(p);
  }
  return false;
}

VerifySuiteResult suite_lemma_3_6(const SuiteParams& params,
                                  const Budget& budget) {
  const long p = params.p;
  SuiteRun run("lemma-3.6", params);
  const PermGroup P = sylow_tower(p, 2);
  const auto subgroups = all_subgroups(P, budget);
  std::vector<PermGroup> conj_to_pp;
  for (const auto& S : subgroups)
    if (generated_by_single_p_cycle(S, p, budget.max_group_order))
      conj_to_pp.push_back(S);
  run.check(conj_to_pp.size() == static_cast<std::size_t>(p),
            "exactly p subgroups are S_n-conjugate to P_p",
            {{"found", conj_to_pp.size()}, {"expected", p}});
  const auto& elems = P.elements(budget.max_group_order);
  for (std::size_t i = 0; i < conj_to_pp.size(); ++i)
    for (std::size_t j = i + 1; j < conj_to_pp.size(); ++j) {
      run.check(conjugating_element(conj_to_pp[i], conj_to_pp[j], elems,
                                    budget.max_group_order)
                    .has_value(),
                "the subgroups are pairwise P-conjugate",
                {{"i", i}, {"j", j}});
    }
  return run.result;
}

// --------------------------------------------------------------------------
// lemma-3.8: a subgroup of P_{p^2} containing a conjugate of P_p and a
// regular elementary abelian of order p^2 is all of P_{p^2}.
// --------------------------------------------------------------------------

VerifySuiteResult suite_lemma_3_8(const SuiteParams& params,
                                  const Budget& budget) {
  const long p = params.p;
  SuiteRun run("lemma-3.8", params);
  const PermGroup P = sylow_tower(p, 2);
  const std::uint64_t target = P.order(budget.max_group_order);
  const auto subgroups = all_subgroups(P, budget);

  std::vector<int> all_points(P.degree());
  std::iota(all_points.begin(), all_points.end(), 1);

  std::vector<const PermGroup*> p_cycles, regulars;
  for (const auto& S : subgroups) {
    if (generated_by_single_p_cycle(S, p, budget.max_group_order))
      p_cycles.push_back(&S);
    if (S.order(budget.max_group_order) ==
            static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p) &&
        is_elementary_abelian(S, p, budget.max_group_order) &&
        is_regular_on(S, all_points, budget.max_group_order))
      regulars.push_back(&S);
  }

  auto contains_subgroup = [&](const PermGroup& big, const PermGroup& small) {
    const auto& be = big.elements(budget.max_group_order);
    for (const auto& x : small.elements(budget.max_group_order))
      if (!std::binary_search(be.begin(), be.end(), x)) return false;
    return true;
  };

  int qualifying = 0;
  for (const auto& S : subgroups) {
    const bool has_cycle = std::any_of(
        p_cycles.begin(), p_cycles.end(),
        [&](const PermGroup* c) { return contains_subgroup(S, *c); });
    const bool has_regular = std::any_of(
        regulars.begin(), regulars.end(),
        [&](const PermGroup* e) { return contains_subgroup(S, *e); });
    if (!has_cycle || !has_regular) continue;
    ++qualifying;
    run.check(S.order(budget.max_group_order) == target,
              "a qualifying subgroup equals P_{p^2}",
              {{"order", S.order(budget.max_group_order)}});
  }
  run.check(qualifying >= 1, "at least one qualifying subgroup exists",
            {{"qualifying", qualifying}});
  return run.result;
}

// --------------------------------------------------------------------------
// lemma-3.9: every maximal subgroup P of E(m_1,…,m_t) with m_1 = 1 and
// E_{p,1} not inside P contains a subgroup of the level >= 2 part with no
// common fixed point on {p+1,…,n}.
// --------------------------------------------------------------------------

VerifySuiteResult suite_lemma_3_9(const SuiteParams& params,
                                  const Budget& budget) {
  const long p = params.p;
  const int n = params.n;
  SuiteRun run("lemma-3.9", params);
  std::vector<int> m = params.m;
  if (m.empty()) {
    const auto digits = base_p_digits(n, p);
    m.assign(digits.begin() + 1, digits.end());
  }
  if (m.empty() || m[0] != 1)
    throw std::invalid_argument("lemma-3.9 needs m_1 = 1");
  const auto dec = elem_abelian_subgroup_sn(n, p, m);
  const PermGroup E = dec.group();

  std::vector<Permutation> primed_gens;
  for (const auto& f : dec.factors)
    if (f.level >= 2)
      for (const auto& g : f.generators) primed_gens.push_back(g);
  const PermGroup e_prime(n, primed_gens);
  const auto& e_prime_elems = e_prime.elements(budget.max_group_order);

  std::vector<int> alpha_points(p);
  std::iota(alpha_points.begin(), alpha_points.end(), 1);
  const PermGroup ep1(n, {Permutation::cycle(alpha_points, n)});

  std::vector<int> tail_points;
  for (int x = static_cast<int>(p) + 1; x <= n; ++x) tail_points.push_back(x);

  for (const auto& P : maximal_subgroups(E, budget)) {
    if (ep1.is_subgroup_of(P, budget.max_group_order)) continue;
    bool found = false;
    for (const auto& Q : all_subgroups(P, budget)) {
      bool inside_prime = true;
      for (const auto& g : Q.generators())
        if (!std::binary_search(e_prime_elems.begin(), e_prime_elems.end(),
                                g)) {
          inside_prime = false;
          break;
        }
      if (!inside_prime) continue;
      if (Q.is_trivial()) continue;
      if (common_fixed_points(Q, tail_points).empty()) {
        found = true;
        break;
      }
    }
    run.check(found,
              "a maximal subgroup avoiding E_{p,1} contains a fixed-point-"
              "free subgroup of the tail",
              {{"subgroup", P.to_json()}});
  }
  return run.result;
}

}  // namespace

GroupDecomposition regular_E_from_digits(int n, long p) {
  return regular_E_impl(n, p);
}

nlohmann::json VerifySuiteResult::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures)
    fails.push_back({{"check", f.check}, {"witness", f.witness}});
  return {{"suite", suite},
          {"parameters", parameters},
          {"checks_run", checks_run},
          {"failures", std::move(fails)},
          {"ok", failures.empty()}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lemma-4.2", "lemma-4.3", "cor-4.4",   "lemma-4.5",
      "lemma-4.6", "lemma-3.6", "lemma-3.8", "lemma-3.9"};
  return names;
}

std::string suite_statement(const std::string& name) {
  if (name == "lemma-4.2")
    return "action of (1,…,p) and of p-cycles supported beyond p on the "
           "basis e_2,…,e_{n-1}, against the stated table and the "
           "permutation-module quotient oracle";
  if (name == "lemma-4.3")
    return "reordering signs of wedge basis vectors: (-1)^{s(k+1,p)(k-2)}, "
           "(-1)^{s(k+1,p)}, (-1)^{s(l+1,p)+1}, (-1)^{s(k+1,p)}";
  if (name == "cor-4.4")
    return "e = e_2∧⋯∧e_p is fixed by every generator of the Sylow "
           "p-subgroup P_n";
  if (name == "lemma-4.5")
    return "alternating coefficient sums of a sigma-fixed vector vanish on "
           "the cycle through n and agree along every other cycle";
  if (name == "lemma-4.6")
    return "for every maximal P < E and u ∈ D^P, the coefficient of e in "
           "Tr_P^E(u) is zero";
  if (name == "lemma-3.6")
    return "P_{p^2} has exactly p subgroups conjugate to P_p in the ambient "
           "symmetric group, and they are pairwise P_{p^2}-conjugate";
  if (name == "lemma-3.8")
    return "a subgroup of P_{p^2} containing a conjugate of P_p and a "
           "regular elementary abelian subgroup of order p^2 is P_{p^2}";
  if (name == "lemma-3.9")
    return "every maximal subgroup of E(1,m_2,…,m_t) not containing "
           "E_{p,1} has a subgroup of the tail acting without common fixed "
           "points on {p+1,…,n}";
  throw std::invalid_argument("unknown suite: " + name);
}

VerifySuiteResult run_suite(const std::string& name, const SuiteParams& params,
                            const Budget& budget) {
  const auto start = Clock::now();
  VerifySuiteResult result;
  if (name == "lemma-4.2")
    result = suite_lemma_4_2(params, budget);
  else if (name == "lemma-4.3")
    result = suite_lemma_4_3(params, budget);
  else if (name == "cor-4.4")
    result = suite_cor_4_4(params, budget);
  else if (name == "lemma-4.5")
    result = suite_lemma_4_5(params, budget);
  else if (name == "lemma-4.6")
    result = suite_lemma_4_6(params, budget);
  else if (name == "lemma-3.6")
    result = suite_lemma_3_6(params, budget);
  else if (name == "lemma-3.8")
    result = suite_lemma_3_8(params, budget);
  else if (name == "lemma-3.9")
    result = suite_lemma_3_9(params, budget);
  else
    throw std::invalid_argument("unknown suite: " + name);
  result.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace hookvert
