#include "hookvert/vertex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "hookvert/subspace.hpp"

namespace hookvert {

ActionTable::ActionTable(const FpModule& M, const PermGroup& G,
                         const Budget& budget) {
  if (G.order(budget.max_group_order) > budget.max_higman_order)
    throw BudgetExceeded("group order exceeds the vertex-search budget of " +
                         std::to_string(budget.max_higman_order));
  elements_ = G.elements(budget.max_group_order);
  inverse_index_.resize(elements_.size());
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index.emplace(elements_[i], i);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    inverse_index_[i] = index.at(elements_[i].inverse());
  matrices_.assign(elements_.size(), FpMatrix(M.prime(), 0, 0));
  const long long count = static_cast<long long>(elements_.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i)
    matrices_[static_cast<std::size_t>(i)] =
        M.action_matrix(elements_[static_cast<std::size_t>(i)]);
}

std::size_t ActionTable::index_of(const Permutation& g) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    throw std::invalid_argument("element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<FpMatrix> endo_commutant(const FpModule& M, const PermGroup& Q,
                                     const Budget& budget) {
  const long p = M.prime();
  const std::size_t d = M.dim();
  if (d * d > budget.max_dim * budget.max_dim)
    throw BudgetExceeded("commutant system exceeds budget");
  // unknowns X_{ij}, row-major; one block of d² equations per generator:
  // (A X - X A)_{ij} = Σ_k A_{ik} X_{kj} - Σ_k X_{ik} A_{kj} = 0
  const auto& gens = Q.generators();
  FpMatrix system(p, gens.size() * d * d, d * d);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const FpMatrix a = M.action_matrix(gens[g]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = (g * d + i) * d + j;
        for (std::size_t k = 0; k < d; ++k) {
          system(row, k * d + j) =
              fp_add(system(row, k * d + j), a(i, k), p);
          system(row, i * d + k) =
              fp_sub(system(row, i * d + k), a(k, j), p);
        }
      }
  }
  const Subspace solutions =
      gens.empty() ? Subspace::full(p, d * d) : kernel(system);
  std::vector<FpMatrix> basis;
  basis.reserve(solutions.dim());
  for (std::size_t r = 0; r < solutions.dim(); ++r) {
    FpMatrix x(p, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        x(i, j) = solutions.basis()(r, i * d + j);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool higman_projective(const FpModule& M, const PermGroup& G,
                       const PermGroup& Q, const ActionTable& table,
                       const Budget& budget) {
  const long p = M.prime();
  const std::size_t d = M.dim();
  const auto commutant = endo_commutant(M, Q, budget);
  const auto transversal =
      left_transversal(G, Q, budget.max_group_order);
  std::vector<std::vector<long>> traces;
  traces.reserve(commutant.size());
  for (const auto& phi : commutant) {
    FpMatrix acc(p, d, d);
    for (const auto& g : transversal) {
      const std::size_t gi = table.index_of(g);
      acc = acc + table.matrix(gi) * phi * table.inverse_matrix(gi);
    }
    std::vector<long> flat;
    flat.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) flat.push_back(acc(i, j));
    traces.push_back(std::move(flat));
  }
  const Subspace span = Subspace::span_of(p, d * d, traces);
  std::vector<long> id_flat(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) id_flat[i * d + i] = 1 % p;
  return span.contains(id_flat);
}

bool higman_projective(const FpModule& M, const PermGroup& G,
                       const PermGroup& Q, const Budget& budget) {
  return higman_projective(M, G, Q, ActionTable(M, G, budget), budget);
}

namespace {

using ElementSet = std::vector<Permutation>;  // sorted

ElementSet conjugated_set(const ElementSet& s, const Permutation& g) {
  const Permutation gi = g.inverse();
  ElementSet out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(g * x * gi);
  std::sort(out.begin(), out.end());
  return out;
}

// least conjugate of the subgroup's element set under all of G
ElementSet canonical_under(const ElementSet& s,
                           const std::vector<Permutation>& conjugators) {
  ElementSet best = conjugated_set(s, conjugators.front());
  for (std::size_t i = 1; i < conjugators.size(); ++i)
    best = std::min(best, conjugated_set(s, conjugators[i]));
  return best;
}

}  // namespace

VertexReport vertex_search(const FpModule& M, const PermGroup& G,
                           const PermGroup& P, const Budget& budget) {
  if (!P.is_subgroup_of(G, budget.max_group_order))
    throw std::invalid_argument("P is not a subgroup of G");
  const ActionTable table(M, G, budget);
  const auto& g_elems = G.elements(budget.max_group_order);

  // fuse the subgroups of P into G-conjugacy classes
  const auto subgroups = all_subgroups(P, budget);
  std::map<ElementSet, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    classes[canonical_under(subgroups[i].elements(budget.max_group_order),
                            g_elems)]
        .push_back(i);

  VertexReport report;
  report.group_name = "S_" + std::to_string(G.degree());
  report.p = p_group_prime(P, budget.max_group_order);
  report.module = M.name();

  std::vector<const ElementSet*> keys;
  for (const auto& [key, members] : classes) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const ElementSet* a, const ElementSet* b) {
              if (a->size() != b->size()) return a->size() < b->size();
              return *a < *b;
            });

  report.classes.resize(keys.size(),
                        VertexClass{PermGroup::trivial(G.degree()), 0, 0,
                                    false});
  const long long count = static_cast<long long>(keys.size());
  // class representatives are independent of each other
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto& members = classes.at(*keys[static_cast<std::size_t>(i)]);
    const PermGroup& rep = subgroups[members.front()];
    VertexClass cls{rep, rep.order(budget.max_group_order), members.size(),
                    false};
    cls.projective = higman_projective(M, G, rep, table, budget);
    report.classes[static_cast<std::size_t>(i)] = std::move(cls);
  }

  // minimal projective classes under containment-up-to-conjugacy
  auto below = [&](const VertexClass& a, const VertexClass& b) {
    if (a.order >= b.order) return false;
    const auto& be = b.representative.elements(budget.max_group_order);
    for (const auto& g : g_elems) {
      bool inside = true;
      for (const auto& x :
           a.representative.elements(budget.max_group_order)) {
        if (!std::binary_search(be.begin(), be.end(), x.conjugated_by(g))) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
    return false;
  };

  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    if (!report.classes[i].projective) continue;
    bool is_minimal = true;
    for (std::size_t j = 0; j < report.classes.size(); ++j) {
      if (i == j || !report.classes[j].projective) continue;
      if (below(report.classes[j], report.classes[i])) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(i);
  }
  if (minimal.size() != 1)
    throw std::logic_error(
        "minimal projective classes are not a single conjugacy class");
  report.vertex_class_index = minimal.front();
  return report;
}

nlohmann::json VertexReport::to_json() const {
  auto class_json = [](const VertexClass& c) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : c.representative.generators())
      gens.push_back(g.cycle_string());
    return nlohmann::json{{"gens", std::move(gens)},
                          {"order", c.order},
                          {"projective", c.projective}};
  };
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : this->classes) classes.push_back(class_json(c));
  nlohmann::json vertex_json = class_json(vertex());
  vertex_json.erase("projective");
  return {{"G", group_name},
          {"p", p},
          {"module", module},
          {"classes", std::move(classes)},
          {"vertex", std::move(vertex_json)}};
}

}  // namespace hookvert
