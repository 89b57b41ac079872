#ifndef HOOKVERT_CONSTRUCTIONS_HPP
#define HOOKVERT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hookvert/perm_group.hpp"

namespace hookvert {

/// g_j ∈ S_{p^d}: the product of p^{j-1} disjoint p-cycles of stride
/// p^{j-1}, e.g. g_2 = (1,4,7)(2,5,8)(3,6,9) for p = 3, d ≥ 2.
Permutation tower_generator(long p, int j, int d);

/// Embedding of (sigma_1,…,sigma_p; pi) into S_{pq}, q the common degree of
/// the sigma: q(a-1)+b ↦ q(pi(a)-1) + sigma_{pi(a)}(b).
Permutation wreath_embed(const std::vector<Permutation>& components,
                         const Permutation& pi);

/// The iterated wreath tower P_{p^d} = ⟨g_1,…,g_d⟩ ≤ S_{p^d}, a Sylow
/// p-subgroup of S_{p^d}; order p^{(p^d-1)/(p-1)}.
PermGroup sylow_tower(long p, int d);

/// Membership in P_{p^d} decided structurally from the wreath recursion,
/// without enumeration.
bool sylow_tower_contains(long p, int d, const Permutation& sigma);

/// ν_p(n!) = Σ floor(n/p^i).
std::uint64_t p_adic_factorial_valuation(std::uint64_t n, long p);

/// p^e if it fits in 64 bits.
std::optional<std::uint64_t> checked_pow(long p, std::uint64_t e);

/// One block P_{p^i,j} or E_{p^i,j} of a fixed Sylow / elementary abelian
/// subgroup: a degree-p^i group translated to act on {offset+1, …,
/// offset+p^i}.
struct BlockFactor {
  std::string label;        // "P_9" or "E_9"
  long p = 0;
  int level = 0;            // i
  int index = 1;            // j
  int offset = 0;           // k(j_i)
  std::uint64_t order_exponent = 0;  // |factor| = p^order_exponent
  std::vector<Permutation> generators;  // already embedded in S_n
};

struct GroupDecomposition {
  int n = 0;
  long p = 0;
  std::vector<BlockFactor> factors;

  std::vector<Permutation> generators() const;
  /// "P_3×P_3×P_9×P_9×P_27", or "1" when there are no factors.
  std::string shape() const;
  std::uint64_t order_exponent() const;
  /// Group with certified order when it fits in 64 bits.
  PermGroup group() const;
};

/// The fixed Sylow p-subgroup P_n ≤ S_n: one block P_{p^i,j} per unit of
/// each p-adic digit of n, shifted to consecutive supports.
GroupDecomposition sylow_subgroup_sn(int n, long p);

/// E_{p^d} ≤ P_{p^d}: regular elementary abelian of order p^d, generated by
/// the iterated conjugate-products g_{j,…,d} of the tower generators.
PermGroup elem_abelian_tower(long p, int d);

/// E(m_1,…,m_t) ≤ S_n, n = Σ m_i p^i: one shifted regular block E_{p^i,j}
/// per unit of m_i. The m_i may be ≥ p.
GroupDecomposition elem_abelian_subgroup_sn(int n, long p,
                                            const std::vector<int>& m);

}  // namespace hookvert

#endif
