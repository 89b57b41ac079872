#ifndef HOOKVERT_PERM_GROUP_HPP
#define HOOKVERT_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "hookvert/config.hpp"
#include "hookvert/perm.hpp"

namespace hookvert {

/// Subgroup of S_n given by generators. Element enumeration is on demand,
/// budgeted, and cached (sorted). The cache is write-once but not
/// synchronized: enumerate before sharing a group across threads.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  /// Wrap an already-closed element set (sorted or not); picks a small
  /// generating set and caches the elements.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Order certified by a construction (e.g. Sylow towers too big to
  /// enumerate).
  std::optional<std::uint64_t> known_order() const { return known_order_; }
  void set_known_order(std::uint64_t order) { known_order_ = order; }

  /// Full element list, sorted; throws BudgetExceeded past `budget`.
  const std::vector<Permutation>& elements(
      std::uint64_t budget = Budget{}.max_group_order) const;
  std::uint64_t order(std::uint64_t budget = Budget{}.max_group_order) const;

  bool contains(const Permutation& s,
                std::uint64_t budget = Budget{}.max_group_order) const;
  bool is_subgroup_of(const PermGroup& other,
                      std::uint64_t budget = Budget{}.max_group_order) const;
  bool same_elements_as(const PermGroup& other,
                        std::uint64_t budget = Budget{}.max_group_order) const;

  /// Moved points; union over generators equals union over all elements.
  std::vector<int> support() const;
  bool is_abelian() const;
  bool is_trivial() const;

  /// {"degree": n, "generators": [cycle strings]}
  nlohmann::json to_json() const;
  static PermGroup from_json(const nlohmann::json& j);

 private:
  int degree_;
  std::vector<Permutation> generators_;
  mutable std::optional<std::uint64_t> known_order_;
  mutable std::shared_ptr<const std::vector<Permutation>> elements_;
};

/// Closure of the generators under composition; sorted. Throws
/// BudgetExceeded if it grows past `budget`.
std::vector<Permutation> closure(int degree,
                                 std::span<const Permutation> generators,
                                 std::uint64_t budget);

/// g H g^{-1}.
PermGroup conjugated_group(const PermGroup& H, const Permutation& g);

/// Representatives of the left cosets P/Q in a deterministic element order;
/// requires Q ≤ P (checked). `seed` permutes the scan order, yielding a
/// different but equally valid transversal (used to check independence of
/// the relative trace from the choice of representatives).
std::vector<Permutation> left_transversal(
    const PermGroup& P, const PermGroup& Q,
    std::uint64_t budget = Budget{}.max_group_order);
std::vector<Permutation> left_transversal_seeded(
    const PermGroup& P, const PermGroup& Q, std::uint64_t seed,
    std::uint64_t budget = Budget{}.max_group_order);

/// Prime p for a group of prime-power order; throws std::invalid_argument
/// otherwise.
long p_group_prime(const PermGroup& P,
                   std::uint64_t budget = Budget{}.max_group_order);

/// All index-p subgroups of a p-group, via the Frattini quotient: closure of
/// commutators and p-th powers, then the hyperplanes of P/Φ(P), pulled back.
std::vector<PermGroup> maximal_subgroups(const PermGroup& P,
                                         const Budget& budget = Budget{});

/// Every subgroup of the p-group P, by bottom-up cyclic extension,
/// deduplicated by element set. Requires |P| within the lattice budget.
std::vector<PermGroup> all_subgroups(const PermGroup& P,
                                     const Budget& budget = Budget{});

/// True iff H maps pts to itself, acts transitively on pts, and |H| = |pts|.
bool is_regular_on(const PermGroup& H, std::span<const int> pts,
                   std::uint64_t budget = Budget{}.max_group_order);

/// Points of pts fixed by every element of H.
std::vector<int> common_fixed_points(const PermGroup& H,
                                     std::span<const int> pts);

/// Abelian with every nontrivial element of order p.
bool is_elementary_abelian(const PermGroup& H, long p,
                           std::uint64_t budget = Budget{}.max_group_order);

/// Exists g among `conjugators` with g A g^{-1} = B (as element sets).
std::optional<Permutation> conjugating_element(
    const PermGroup& A, const PermGroup& B,
    std::span<const Permutation> conjugators,
    std::uint64_t budget = Budget{}.max_group_order);

}  // namespace hookvert

#endif
