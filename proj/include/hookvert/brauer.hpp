#ifndef HOOKVERT_BRAUER_HPP
#define HOOKVERT_BRAUER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookvert/config.hpp"
#include "hookvert/module.hpp"
#include "hookvert/perm_group.hpp"
#include "hookvert/subspace.hpp"

namespace hookvert {

/// M^P = ∩_{g ∈ generators(P)} ker(action(g) - I).
Subspace fixed_points(const FpModule& M, const PermGroup& P);

/// Tr_Q^P(u) = Σ_{x ∈ P/Q} x·u for u ∈ M^Q (checked against the generators
/// of Q). Result lies in M^P.
std::vector<long> rel_trace(const FpModule& M, const PermGroup& P,
                            const PermGroup& Q, std::span<const long> u,
                            const Budget& budget = Budget{});
/// Same, over a caller-supplied left transversal of Q in P.
std::vector<long> rel_trace_over(const FpModule& M, const PermGroup& Q,
                                 std::span<const Permutation> transversal,
                                 std::span<const long> u);

/// Span of Tr_Q^P over a basis of M^Q.
Subspace trace_image(const FpModule& M, const PermGroup& P, const PermGroup& Q,
                     const Budget& budget = Budget{});

/// Full Brauer data of M at P: fixed points, the trace image of every
/// maximal subgroup, their sum, and a complement basis realizing M(P)
/// inside M^P.
struct BrauerAnalysis {
  Subspace fixed;
  std::vector<PermGroup> maximals;
  std::vector<Subspace> images;   // aligned with maximals
  Subspace trace_sum;
  /// Rows span a complement of the trace sum inside M^P; dim = dim M(P).
  std::vector<std::vector<long>> quotient_basis;

  std::size_t dim_quotient() const { return quotient_basis.size(); }
};

BrauerAnalysis brauer_quotient(const FpModule& M, const PermGroup& P,
                               const Budget& budget = Budget{});

/// True iff every generator of P acts as the identity on the chosen
/// complement modulo the trace sum.
bool p_acts_trivially_on_quotient(const FpModule& M, const PermGroup& P,
                                  const BrauerAnalysis& analysis);

/// Nonvanishing certificate for M(P): basis element b0 is P-fixed and the b0
/// coordinate vanishes on every maximal-subgroup trace image; true forces
/// dim M(P) ≥ 1.
bool prop22_certificate(const FpModule& M, const PermGroup& P,
                        std::size_t b0_position,
                        const Budget& budget = Budget{});
/// Same, reusing an existing analysis.
bool prop22_certificate(const FpModule& M, std::size_t b0_position,
                        const BrauerAnalysis& analysis);

struct BrauerReport {
  std::string module;
  nlohmann::json group;
  std::size_t dim_fixed = 0;
  std::vector<std::size_t> trace_image_dims;
  std::size_t dim_sum = 0;
  std::size_t dim_quotient = 0;
  std::optional<std::pair<std::vector<int>, bool>> certificate;  // (b0, verdict)

  nlohmann::json to_json() const;
};

BrauerReport make_brauer_report(
    const FpModule& M, const PermGroup& P, const BrauerAnalysis& analysis,
    std::optional<std::pair<std::vector<int>, bool>> certificate);

}  // namespace hookvert

#endif
