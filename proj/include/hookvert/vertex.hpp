#ifndef HOOKVERT_VERTEX_HPP
#define HOOKVERT_VERTEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookvert/brauer.hpp"
#include "hookvert/config.hpp"
#include "hookvert/module.hpp"
#include "hookvert/perm_group.hpp"

namespace hookvert {

/// Precomputed action matrices of every element of G, plus inverse lookup.
class ActionTable {
 public:
  ActionTable(const FpModule& M, const PermGroup& G, const Budget& budget);
  const std::vector<Permutation>& elements() const { return elements_; }
  const FpMatrix& matrix(std::size_t index) const { return matrices_[index]; }
  const FpMatrix& inverse_matrix(std::size_t index) const {
    return matrices_[inverse_index_[index]];
  }
  std::size_t index_of(const Permutation& g) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<FpMatrix> matrices_;
  std::vector<std::size_t> inverse_index_;
};

/// Basis of {X : action(q)·X = X·action(q) for all generators q of Q}.
std::vector<FpMatrix> endo_commutant(const FpModule& M, const PermGroup& Q,
                                     const Budget& budget = Budget{});

/// Relative projectivity by Higman's criterion: id_M lies in the span of
/// Tr_Q^G(φ) = Σ_{g ∈ G/Q} action(g)·φ·action(g)^{-1} over a basis φ of the
/// Q-commutant.
bool higman_projective(const FpModule& M, const PermGroup& G,
                       const PermGroup& Q, const ActionTable& table,
                       const Budget& budget = Budget{});
bool higman_projective(const FpModule& M, const PermGroup& G,
                       const PermGroup& Q, const Budget& budget = Budget{});

struct VertexClass {
  PermGroup representative;
  std::uint64_t order = 0;
  std::size_t class_size = 0;  // subgroups of P in this G-class
  bool projective = false;
};

struct VertexReport {
  std::string group_name;  // "S_n"
  long p = 0;
  std::string module;
  std::vector<VertexClass> classes;   // ascending order, deterministic
  std::size_t vertex_class_index = 0;

  const VertexClass& vertex() const { return classes[vertex_class_index]; }
  nlohmann::json to_json() const;
};

/// Evaluates higman_projective on one representative per G-conjugacy class
/// of subgroups of P (fusion by explicit search over enumerated G) and
/// returns the minimal projective class, checking it is unique.
VertexReport vertex_search(const FpModule& M, const PermGroup& G,
                           const PermGroup& P, const Budget& budget = Budget{});

}  // namespace hookvert

#endif
