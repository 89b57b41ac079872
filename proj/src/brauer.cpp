#include "hookvert/brauer.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hookvert {

Subspace fixed_points(const FpModule& M, const PermGroup& P) {
  const long p = M.prime();
  const std::size_t d = M.dim();
  if (P.generators().empty()) return Subspace::full(p, d);
  // stack (A_g - I) over the generators; the kernel is the common fixed space
  FpMatrix stacked(p, 0, d);
  const FpMatrix id = FpMatrix::identity(p, d);
  for (const auto& g : P.generators())
    stacked = stacked.stacked(M.action_matrix(g) - id);
  return kernel(stacked);
}

namespace {

bool is_fixed_by(const FpModule& M, const PermGroup& Q,
                 std::span<const long> u) {
  for (const auto& g : Q.generators()) {
    const std::vector<long> image = M.action_matrix(g).apply(u);
    if (!std::equal(image.begin(), image.end(), u.begin(), u.end()))
      return false;
  }
  return true;
}

}  // namespace

std::vector<long> rel_trace_over(const FpModule& M, const PermGroup& Q,
                                 std::span<const Permutation> transversal,
                                 std::span<const long> u) {
  if (u.size() != M.dim()) throw std::invalid_argument("vector size mismatch");
  if (!is_fixed_by(M, Q, u))
    throw std::invalid_argument("vector is not Q-fixed");
  const long p = M.prime();
  std::vector<long> acc(M.dim(), 0);
  for (const auto& x : transversal) {
    const std::vector<long> xu = M.action_matrix(x).apply(u);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] = fp_add(acc[i], xu[i], p);
  }
  return acc;
}

std::vector<long> rel_trace(const FpModule& M, const PermGroup& P,
                            const PermGroup& Q, std::span<const long> u,
                            const Budget& budget) {
  const auto transversal = left_transversal(P, Q, budget.max_group_order);
  return rel_trace_over(M, Q, transversal, u);
}

Subspace trace_image(const FpModule& M, const PermGroup& P, const PermGroup& Q,
                     const Budget& budget) {
  const Subspace fixed_q = fixed_points(M, Q);
  const auto transversal = left_transversal(P, Q, budget.max_group_order);
  std::vector<std::vector<long>> images;
  images.reserve(fixed_q.dim());
  for (std::size_t i = 0; i < fixed_q.dim(); ++i) {
    const auto row = fixed_q.basis().row(i);
    images.push_back(rel_trace_over(
        M, Q, transversal, std::vector<long>(row.begin(), row.end())));
  }
  return Subspace::span_of(M.prime(), M.dim(), images);
}

BrauerAnalysis brauer_quotient(const FpModule& M, const PermGroup& P,
                               const Budget& budget) {
  if (M.dim() > budget.max_dim)
    throw BudgetExceeded("module dimension exceeds budget");
  BrauerAnalysis out{fixed_points(M, P),
                     maximal_subgroups(P, budget),
                     {},
                     Subspace(M.prime(), M.dim()),
                     {}};

  out.images.resize(out.maximals.size(), Subspace(M.prime(), M.dim()));
  (void)P.elements(budget.max_group_order);
  for (auto& Q : out.maximals) (void)Q.elements(budget.max_group_order);
  const long long count = static_cast<long long>(out.maximals.size());
  // trace images of distinct maximal subgroups are independent of each other
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i)
    out.images[static_cast<std::size_t>(i)] =
        trace_image(M, P, out.maximals[static_cast<std::size_t>(i)], budget);

  for (const auto& image : out.images)
    out.trace_sum = sum(out.trace_sum, image);

  // complement of the trace sum inside M^P: express the trace basis in
  // fixed-space coordinates, reduce, and keep the non-pivot coordinates
  const std::size_t fdim = out.fixed.dim();
  std::vector<std::vector<long>> trace_coords;
  for (std::size_t i = 0; i < out.trace_sum.dim(); ++i) {
    const auto row = out.trace_sum.basis().row(i);
    const auto coords =
        out.fixed.coordinates(std::vector<long>(row.begin(), row.end()));
    if (!coords)
      throw std::logic_error("trace sum escapes the fixed space");
    trace_coords.push_back(*coords);
  }
  const Subspace reduced =
      Subspace::span_of(M.prime(), fdim, trace_coords);
  std::vector<bool> is_pivot(fdim, false);
  {
    std::size_t col = 0;
    for (std::size_t r = 0; r < reduced.dim(); ++r) {
      while (col < fdim && reduced.basis()(r, col) == 0) ++col;
      is_pivot[col] = true;
    }
  }
  for (std::size_t j = 0; j < fdim; ++j) {
    if (is_pivot[j]) continue;
    const auto row = out.fixed.basis().row(j);
    out.quotient_basis.emplace_back(row.begin(), row.end());
  }
  return out;
}

namespace {

// coordinates of a fixed vector reduced modulo the trace sum: the non-pivot
// coordinates that remain after eliminating against the reduced trace basis
std::vector<long> quotient_coordinates(const Subspace& fixed,
                                       const Subspace& trace_in_fixed_coords,
                                       std::span<const long> v, long p) {
  const auto coords = fixed.coordinates(v);
  if (!coords) throw std::logic_error("vector is not P-fixed");
  std::vector<long> rem = *coords;
  const auto& basis = trace_in_fixed_coords.basis();
  std::size_t col = 0;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    while (col < basis.cols() && basis(r, col) == 0) ++col;
    const long c = rem[col];
    if (c != 0)
      for (std::size_t j = col; j < basis.cols(); ++j)
        rem[j] = fp_sub(rem[j], fp_mul(c, basis(r, j), p), p);
  }
  return rem;
}

Subspace trace_sum_in_fixed_coords(const FpModule& M,
                                   const BrauerAnalysis& analysis) {
  std::vector<std::vector<long>> coords;
  for (std::size_t i = 0; i < analysis.trace_sum.dim(); ++i) {
    const auto row = analysis.trace_sum.basis().row(i);
    coords.push_back(*analysis.fixed.coordinates(
        std::vector<long>(row.begin(), row.end())));
  }
  return Subspace::span_of(M.prime(), analysis.fixed.dim(), coords);
}

}  // namespace

bool p_acts_trivially_on_quotient(const FpModule& M, const PermGroup& P,
                                  const BrauerAnalysis& analysis) {
  const long p = M.prime();
  const Subspace reduced = trace_sum_in_fixed_coords(M, analysis);
  for (const auto& g : P.generators()) {
    const FpMatrix action = M.action_matrix(g);
    for (const auto& v : analysis.quotient_basis) {
      const std::vector<long> gv = action.apply(v);
      const auto lhs = quotient_coordinates(analysis.fixed, reduced, gv, p);
      const auto rhs = quotient_coordinates(analysis.fixed, reduced, v, p);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool prop22_certificate(const FpModule& M, std::size_t b0_position,
                        const BrauerAnalysis& analysis) {
  if (b0_position >= M.dim())
    throw std::invalid_argument("basis position out of range");
  // (i) b0 is P-fixed
  std::vector<long> b0(M.dim(), 0);
  b0[b0_position] = 1 % M.prime();
  if (!analysis.fixed.contains(b0)) return false;
  // (ii) the b0 coordinate vanishes on every maximal trace image
  for (const auto& image : analysis.images)
    if (!image.coordinate_vanishes_on(b0_position)) return false;
  return true;
}

bool prop22_certificate(const FpModule& M, const PermGroup& P,
                        std::size_t b0_position, const Budget& budget) {
  return prop22_certificate(M, b0_position, brauer_quotient(M, P, budget));
}

nlohmann::json BrauerReport::to_json() const {
  nlohmann::json traces = nlohmann::json::array();
  for (std::size_t i = 0; i < trace_image_dims.size(); ++i)
    traces.push_back(
        {{"subgroup_index", i}, {"dim", trace_image_dims[i]}});
  nlohmann::json j{{"module", module},
                   {"group", group},
                   {"dim_fixed", dim_fixed},
                   {"trace_images", std::move(traces)},
                   {"dim_sum", dim_sum},
                   {"dim_quotient", dim_quotient}};
  if (certificate)
    j["certificate"] = {{"b0", certificate->first},
                        {"verdict", certificate->second}};
  return j;
}

BrauerReport make_brauer_report(
    const FpModule& M, const PermGroup& P, const BrauerAnalysis& analysis,
    std::optional<std::pair<std::vector<int>, bool>> certificate) {
  BrauerReport report;
  report.module = M.name();
  report.group = P.to_json();
  report.dim_fixed = analysis.fixed.dim();
  for (const auto& image : analysis.images)
    report.trace_image_dims.push_back(image.dim());
  report.dim_sum = analysis.trace_sum.dim();
  report.dim_quotient = analysis.dim_quotient();
  report.certificate = std::move(certificate);
  return report;
}

}  // namespace hookvert
