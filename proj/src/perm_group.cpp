#include "hookvert/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace hookvert {

namespace {

bool sorted_contains(const std::vector<Permutation>& sorted,
                     const Permutation& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
  std::erase_if(generators_,
                [](const Permutation& g) { return g.is_identity(); });
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    const int t[] = {1, 2};
    gens.push_back(Permutation::cycle(t, degree));
  }
  if (degree >= 3) {
    std::vector<int> full(degree);
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Permutation::cycle(full, degree));
  }
  PermGroup g(degree, std::move(gens));
  std::uint64_t order = 1;
  for (int k = 2; k <= degree; ++k) order *= static_cast<std::uint64_t>(k);
  g.set_known_order(order);
  return g;
}

PermGroup PermGroup::from_elements(int degree,
                                   std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  std::vector<Permutation> gens;
  std::vector<Permutation> span{Permutation(degree)};
  for (const auto& e : elements) {
    if (sorted_contains(span, e)) continue;
    gens.push_back(e);
    span = closure(degree, gens, elements.size());
  }
  PermGroup g(degree, std::move(gens));
  g.set_known_order(elements.size());
  g.elements_ =
      std::make_shared<const std::vector<Permutation>>(std::move(elements));
  return g;
}

const std::vector<Permutation>& PermGroup::elements(
    std::uint64_t budget) const {
  if (!elements_)
    elements_ = std::make_shared<const std::vector<Permutation>>(
        closure(degree_, generators_, budget));
  return *elements_;
}

std::uint64_t PermGroup::order(std::uint64_t budget) const {
  if (known_order_) return *known_order_;
  const std::uint64_t n = elements(budget).size();
  known_order_ = n;
  return n;
}

bool PermGroup::contains(const Permutation& s, std::uint64_t budget) const {
  if (s.degree() != degree_) return false;
  return sorted_contains(elements(budget), s);
}

bool PermGroup::is_subgroup_of(const PermGroup& other,
                               std::uint64_t budget) const {
  if (degree_ != other.degree()) return false;
  const auto& big = other.elements(budget);
  for (const auto& g : generators_)
    if (!sorted_contains(big, g)) return false;
  // generators inside a finite group generate a subgroup of it
  return true;
}

bool PermGroup::same_elements_as(const PermGroup& other,
                                 std::uint64_t budget) const {
  return degree_ == other.degree() &&
         elements(budget) == other.elements(budget);
}

std::vector<int> PermGroup::support() const {
  std::set<int> pts;
  for (const auto& g : generators_)
    for (int x : g.support()) pts.insert(x);
  return {pts.begin(), pts.end()};
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

bool PermGroup::is_trivial() const { return generators_.empty(); }

nlohmann::json PermGroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) gens.push_back(g.cycle_string());
  return {{"degree", degree_}, {"generators", std::move(gens)}};
}

PermGroup PermGroup::from_json(const nlohmann::json& j) {
  const int degree = j.at("degree").get<int>();
  std::vector<Permutation> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(Permutation::parse(s.get<std::string>(), degree));
  return PermGroup(degree, std::move(gens));
}

std::vector<Permutation> closure(int degree,
                                 std::span<const Permutation> generators,
                                 std::uint64_t budget) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::queue<Permutation> todo;
  const Permutation id(degree);
  seen.insert(id);
  todo.push(id);
  while (!todo.empty()) {
    const Permutation current = std::move(todo.front());
    todo.pop();
    for (const auto& g : generators) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("group enumeration exceeds budget of " +
                               std::to_string(budget));
        todo.push(std::move(next));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup conjugated_group(const PermGroup& H, const Permutation& g) {
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const auto& h : H.generators()) gens.push_back(h.conjugated_by(g));
  PermGroup out(H.degree(), std::move(gens));
  if (H.known_order()) out.set_known_order(*H.known_order());
  return out;
}

namespace {

std::vector<Permutation> transversal_impl(const PermGroup& P,
                                          const PermGroup& Q,
                                          std::vector<std::size_t> scan_order,
                                          std::uint64_t budget) {
  if (!Q.is_subgroup_of(P, budget))
    throw std::invalid_argument("Q is not a subgroup of P");
  const auto& elems = P.elements(budget);
  const auto& q_elems = Q.elements(budget);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> covered(elems.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t pos : scan_order) {
    if (covered[pos]) continue;
    const Permutation& x = elems[pos];
    reps.push_back(x);
    for (const auto& q : q_elems) covered[index.at(x * q)] = true;
  }
  return reps;
}

}  // namespace

std::vector<Permutation> left_transversal(const PermGroup& P,
                                          const PermGroup& Q,
                                          std::uint64_t budget) {
  std::vector<std::size_t> order(P.elements(budget).size());
  std::iota(order.begin(), order.end(), 0);
  return transversal_impl(P, Q, std::move(order), budget);
}

std::vector<Permutation> left_transversal_seeded(const PermGroup& P,
                                                 const PermGroup& Q,
                                                 std::uint64_t seed,
                                                 std::uint64_t budget) {
  std::vector<std::size_t> order(P.elements(budget).size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return transversal_impl(P, Q, std::move(order), budget);
}

long p_group_prime(const PermGroup& P, std::uint64_t budget) {
  std::uint64_t n = P.order(budget);
  if (n == 1) return 2;  // trivial group counts as a p-group for any p
  long p = 2;
  while (n % p != 0) {
    ++p;
    if (p > static_cast<long>(n)) break;
  }
  while (n % p == 0) n /= p;
  if (n != 1)
    throw std::invalid_argument("group order is not a prime power");
  return p;
}

namespace {

struct ElementVectorHash {
  std::size_t operator()(const std::vector<Permutation>& v) const {
    std::size_t h = v.size();
    PermutationHash ph;
    for (const auto& s : v) h = h * 1000003u ^ ph(s);
    return h;
  }
};

}  // namespace

std::vector<PermGroup> maximal_subgroups(const PermGroup& P,
                                         const Budget& budget) {
  const std::uint64_t enum_budget = budget.max_group_order;
  const long p = p_group_prime(P, enum_budget);
  const auto& elems = P.elements(enum_budget);
  if (elems.size() == 1) return {};

  // Frattini subgroup: closure of all commutators and p-th powers.
  std::vector<Permutation> phi_gens;
  for (const auto& x : elems) {
    phi_gens.push_back(x.power(p));
    for (const auto& y : elems)
      phi_gens.push_back(x * y * x.inverse() * y.inverse());
  }
  std::sort(phi_gens.begin(), phi_gens.end());
  phi_gens.erase(std::unique(phi_gens.begin(), phi_gens.end()),
                 phi_gens.end());
  const std::vector<Permutation> phi =
      closure(P.degree(), phi_gens, enum_budget);

  // Canonical coset labels: least element of x·Φ.
  auto coset_key = [&](const Permutation& x) {
    Permutation best = x * phi.front();
    for (std::size_t i = 1; i < phi.size(); ++i)
      best = std::min(best, x * phi[i]);
    return best;
  };
  std::map<Permutation, std::vector<long>> coords_of_coset;

  // Basis of the elementary abelian quotient P/Φ.
  std::vector<Permutation> basis;
  std::vector<Permutation> span(phi);
  for (const auto& x : elems) {
    if (sorted_contains(span, x)) continue;
    basis.push_back(x);
    std::vector<Permutation> span_gens(span);
    span_gens.push_back(x);
    span = closure(P.degree(), span_gens, enum_budget);
  }
  const std::size_t d = basis.size();

  // Coordinates of every coset: walk all of GF(p)^d once.
  std::vector<long> tuple(d, 0);
  for (;;) {
    Permutation rep(P.degree());
    for (std::size_t i = 0; i < d; ++i)
      if (tuple[i] != 0) rep = rep * basis[i].power(tuple[i]);
    coords_of_coset.emplace(coset_key(rep), tuple);
    std::size_t carry = 0;
    while (carry < d && ++tuple[carry] == p) tuple[carry++] = 0;
    if (carry == d) break;
  }

  // Hyperplanes = kernels of the (p^d-1)/(p-1) normalized functionals.
  std::vector<std::vector<long>> functionals;
  std::vector<long> f(d, 0);
  for (;;) {
    std::size_t carry = 0;
    while (carry < d && ++f[carry] == p) f[carry++] = 0;
    if (carry == d) break;
    std::size_t lead = d;
    for (std::size_t i = 0; i < d; ++i)
      if (f[i] != 0) {
        lead = i;
        break;
      }
    if (f[lead] == 1) functionals.push_back(f);
  }

  std::vector<PermGroup> out;
  for (const auto& functional : functionals) {
    std::vector<Permutation> members;
    for (const auto& x : elems) {
      const auto& c = coords_of_coset.at(coset_key(x));
      long acc = 0;
      for (std::size_t i = 0; i < d; ++i) acc += functional[i] * c[i];
      if (acc % p == 0) members.push_back(x);
    }
    out.push_back(PermGroup::from_elements(P.degree(), std::move(members)));
  }
  return out;
}

std::vector<PermGroup> all_subgroups(const PermGroup& P,
                                     const Budget& budget) {
  const std::uint64_t enum_budget = budget.max_group_order;
  const long p = p_group_prime(P, enum_budget);
  const std::uint64_t order = P.order(enum_budget);
  if (order > budget.subgroup_lattice(p))
    throw BudgetExceeded("subgroup lattice budget exceeded: |P| = " +
                         std::to_string(order));
  const auto& elems = P.elements(enum_budget);

  using ElementSet = std::vector<Permutation>;  // sorted
  std::unordered_set<ElementSet, ElementVectorHash> seen;
  std::vector<ElementSet> result;
  std::vector<ElementSet> frontier;

  const ElementSet trivial{Permutation(P.degree())};
  seen.insert(trivial);
  result.push_back(trivial);
  frontier.push_back(trivial);

  // Cyclic extension: in a p-group every subgroup of order p^{k+1} has a
  // normal subgroup of index p, so extending each level-k subgroup H by the
  // elements g of N_P(H) with g^p ∈ H reaches the whole next level.
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& H : frontier) {
      for (const auto& g : elems) {
        if (sorted_contains(H, g)) continue;
        if (!sorted_contains(H, g.power(p))) continue;
        bool normalizes = true;
        for (const auto& h : H) {
          if (!sorted_contains(H, h.conjugated_by(g))) {
            normalizes = false;
            break;
          }
        }
        if (!normalizes) continue;
        ElementSet bigger;
        bigger.reserve(H.size() * p);
        Permutation gi(P.degree());
        for (long i = 0; i < p; ++i) {
          for (const auto& h : H) bigger.push_back(h * gi);
          gi = gi * g;
        }
        std::sort(bigger.begin(), bigger.end());
        if (seen.insert(bigger).second) {
          result.push_back(bigger);
          next.push_back(std::move(bigger));
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(result.begin(), result.end(),
            [](const ElementSet& a, const ElementSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<PermGroup> out;
  out.reserve(result.size());
  for (auto& s : result)
    out.push_back(PermGroup::from_elements(P.degree(), std::move(s)));
  return out;
}

bool is_regular_on(const PermGroup& H, std::span<const int> pts,
                   std::uint64_t budget) {
  const std::set<int> point_set(pts.begin(), pts.end());
  if (point_set.empty()) return H.order(budget) == 1;
  for (const auto& g : H.generators())
    for (int x : point_set)
      if (!point_set.count(g(x))) return false;
  // orbit of the least point under the generators
  std::set<int> orbit{*point_set.begin()};
  std::queue<int> todo;
  todo.push(*point_set.begin());
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (const auto& g : H.generators()) {
      for (int y : {g(x), g.inverse()(x)}) {
        if (orbit.insert(y).second) todo.push(y);
      }
    }
  }
  return orbit == point_set && H.order(budget) == point_set.size();
}

std::vector<int> common_fixed_points(const PermGroup& H,
                                     std::span<const int> pts) {
  std::vector<int> fixed;
  for (int x : pts) {
    bool ok = true;
    for (const auto& g : H.generators())
      if (g(x) != x) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(x);
  }
  return fixed;
}

bool is_elementary_abelian(const PermGroup& H, long p, std::uint64_t budget) {
  if (!H.is_abelian()) return false;
  for (const auto& g : H.generators()) {
    const int ord = g.order();
    if (ord != 1 && ord != p) return false;
  }
  const std::uint64_t n = H.order(budget);
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

std::optional<Permutation> conjugating_element(
    const PermGroup& A, const PermGroup& B,
    std::span<const Permutation> conjugators, std::uint64_t budget) {
  const auto& b_elems = B.elements(budget);
  const auto& a_elems = A.elements(budget);
  if (a_elems.size() != b_elems.size()) return std::nullopt;
  for (const auto& g : conjugators) {
    bool all_in = true;
    for (const auto& a : a_elems) {
      if (!sorted_contains(b_elems, a.conjugated_by(g))) {
        all_in = false;
        break;
      }
    }
    if (all_in) return g;
  }
  return std::nullopt;
}

}  // namespace hookvert
