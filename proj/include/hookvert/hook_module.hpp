#ifndef HOOKVERT_HOOK_MODULE_HPP
#define HOOKVERT_HOOK_MODULE_HPP

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hookvert/module.hpp"

namespace hookvert {

/// Strictly increasing index tuple labelling a wedge basis vector
/// e_{i_1} ∧ ⋯ ∧ e_{i_r}.
struct WedgeIndex {
  std::vector<int> indices;
  auto operator<=>(const WedgeIndex&) const = default;
};

/// Sort a raw index tuple, returning the sign of the sorting permutation;
/// nullopt when an index repeats (the wedge is zero).
std::optional<std::pair<int, WedgeIndex>> wedge_normalize(
    std::span<const int> raw);

/// s(k1,k2) = k2 - (k1 - 1) when k1 ≤ k2, else 0: the number of indices in
/// the segment [k1, k2].
int segment_length(int k1, int k2);

/// Element of a wedge module as a dense coefficient vector over the
/// lex-ordered wedge basis.
struct WedgeVector {
  std::vector<long> coeffs;
  bool operator==(const WedgeVector&) const = default;
};

/// Common mechanics of the r-th exterior power of a module with basis
/// e_2,…,e_max: lex-ordered wedge basis, structural action by multilinear
/// expansion of sigma·e_{i_1} ∧ ⋯ ∧ sigma·e_{i_r}.
class WedgeModule : public FpModule {
 public:
  long prime() const override { return p_; }
  int degree() const override { return n_; }
  std::size_t dim() const override { return basis_.size(); }
  int r() const { return r_; }
  int max_index() const { return max_index_; }

  const std::vector<WedgeIndex>& basis() const { return basis_; }
  std::size_t position(const WedgeIndex& w) const;

  WedgeVector zero_vector() const;
  WedgeVector basis_element(std::size_t pos) const;

  WedgeVector act(const Permutation& sigma, const WedgeVector& v) const;
  FpMatrix action_matrix(const Permutation& sigma) const override;

  /// Coefficient of the wedge named by `raw` (any index order), adjusted by
  /// the sign of wedge_normalize; 0 if an index repeats.
  long coefficient(const WedgeVector& v, std::span<const int> raw) const;

  /// {"n":…, "p":…, "r":…, "terms":[{"indices":[…],"coeff":…}]}
  nlohmann::json vector_to_json(const WedgeVector& v) const;

 protected:
  WedgeModule(long p, int n, int r, int max_index);
  /// Sparse expansion of sigma·e_i over e_2,…,e_max.
  virtual std::vector<std::pair<int, long>> natural_terms(
      const Permutation& sigma, int i) const = 0;

  long p_;
  int n_, r_, max_index_;
  std::vector<WedgeIndex> basis_;
  std::map<WedgeIndex, std::size_t> positions_;
};

/// D^{(n-r,1^r)} = ⋀^r D^{(n-1,1)} in the p | n regime: basis wedges over
/// e_2,…,e_{n-1} with e_1 = 0 and e_n = -e_2-⋯-e_{n-1}; dim C(n-2, r).
/// Requires 0 ≤ r ≤ min(p-1, n-2).
class HookModule final : public WedgeModule {
 public:
  HookModule(long p, int n, int r);
  std::string name() const override;

  /// sigma·e_i as a dense vector on e_2,…,e_{n-1} (the r = 1 action).
  std::vector<long> natural_image(const Permutation& sigma, int i) const;

  /// The distinguished vector e = e_2∧⋯∧e_p; requires r = p-1.
  WedgeVector special_e() const;
  std::size_t special_e_position() const;

 protected:
  std::vector<std::pair<int, long>> natural_terms(const Permutation& sigma,
                                                  int i) const override;
};

/// ⋀^r S^{(n-1,1)}: basis wedges over f_2,…,f_n (f_i = ω_i - ω_1, f_1 = 0,
/// no further relation); dim C(n-1, r). For p ∤ n and r ≤ p-1 this is the
/// simple module D^{(n-r,1^r)}.
class SpechtHookModule final : public WedgeModule {
 public:
  SpechtHookModule(long p, int n, int r);
  std::string name() const override;

 protected:
  std::vector<std::pair<int, long>> natural_terms(const Permutation& sigma,
                                                  int i) const override;
};

/// λ_{k̂,x}: coefficient of ê_k∧e_x = e_2∧…∧e_{k-1}∧e_{k+1}∧…∧e_p∧e_x.
/// Requires r = p-1.
long lambda_hat(const WedgeModule& m, const WedgeVector& v, int k, int x);
/// λ_{k̂ l̂,x,y}: coefficient of ê_{k,l}∧e_x∧e_y, for 2 ≤ k < l ≤ p.
long lambda_hat2(const WedgeModule& m, const WedgeVector& v, int k, int l,
                 int x, int y);
/// Coefficient of e = e_2∧⋯∧e_p.
long lambda_e(const WedgeModule& m, const WedgeVector& v);

}  // namespace hookvert

#endif
