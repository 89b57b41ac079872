#include "hookvert/hook_module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hookvert {

std::optional<std::pair<int, WedgeIndex>> wedge_normalize(
    std::span<const int> raw) {
  std::vector<int> idx(raw.begin(), raw.end());
  // insertion sort, counting transpositions
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int x = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > x) {
      idx[j] = idx[j - 1];
      sign = -sign;
      --j;
    }
    idx[j] = x;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return std::nullopt;
  return std::make_pair(sign, WedgeIndex{std::move(idx)});
}

int segment_length(int k1, int k2) { return k2 < k1 ? 0 : k2 - (k1 - 1); }

WedgeModule::WedgeModule(long p, int n, int r, int max_index)
    : p_(p), n_(n), r_(r), max_index_(max_index) {
  check_prime(p);
  // all strictly increasing r-tuples from {2,…,max_index}, lex order
  std::vector<int> tuple(r);
  for (int i = 0; i < r; ++i) tuple[i] = 2 + i;
  const int count = max_index - 1;  // available indices
  if (r > count) throw std::invalid_argument("wedge power exceeds dimension");
  for (;;) {
    basis_.push_back(WedgeIndex{tuple});
    int i = r - 1;
    while (i >= 0 && tuple[i] == max_index - (r - 1 - i)) --i;
    if (i < 0) break;
    ++tuple[i];
    for (int j = i + 1; j < r; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  for (std::size_t pos = 0; pos < basis_.size(); ++pos)
    positions_.emplace(basis_[pos], pos);
}

std::size_t WedgeModule::position(const WedgeIndex& w) const {
  const auto it = positions_.find(w);
  if (it == positions_.end())
    throw std::invalid_argument("not a wedge basis index");
  return it->second;
}

WedgeVector WedgeModule::zero_vector() const {
  return WedgeVector{std::vector<long>(dim(), 0)};
}

WedgeVector WedgeModule::basis_element(std::size_t pos) const {
  WedgeVector v = zero_vector();
  v.coeffs.at(pos) = 1 % p_;
  return v;
}

WedgeVector WedgeModule::act(const Permutation& sigma,
                             const WedgeVector& v) const {
  if (sigma.degree() != n_) throw std::invalid_argument("degree mismatch");
  if (v.coeffs.size() != dim()) throw std::invalid_argument("bad vector");
  WedgeVector out = zero_vector();
  std::vector<std::vector<std::pair<int, long>>> factor_cache(n_ + 1);
  std::vector<bool> cached(n_ + 1, false);
  std::vector<int> chosen(r_);

  for (std::size_t pos = 0; pos < dim(); ++pos) {
    const long c = v.coeffs[pos];
    if (c == 0) continue;
    const auto& tuple = basis_[pos].indices;
    for (int i : tuple) {
      if (!cached[i]) {
        factor_cache[i] = natural_terms(sigma, i);
        cached[i] = true;
      }
    }
    // distribute the product of the sparse factors
    auto expand = [&](auto&& self, int level, long coeff) -> void {
      if (level == r_) {
        if (auto norm = wedge_normalize(chosen)) {
          const auto& [sign, sorted] = *norm;
          const std::size_t target = positions_.at(sorted);
          const long signed_coeff = sign == 1 ? coeff : fp_neg(coeff, p_);
          out.coeffs[target] = fp_add(out.coeffs[target], signed_coeff, p_);
        }
        return;
      }
      for (const auto& [index, factor_coeff] : factor_cache[tuple[level]]) {
        chosen[level] = index;
        self(self, level + 1, fp_mul(coeff, factor_coeff, p_));
      }
    };
    expand(expand, 0, c);
  }
  return out;
}

FpMatrix WedgeModule::action_matrix(const Permutation& sigma) const {
  FpMatrix m(p_, dim(), dim());
  for (std::size_t col = 0; col < dim(); ++col) {
    const WedgeVector image = act(sigma, basis_element(col));
    for (std::size_t row = 0; row < dim(); ++row)
      m(row, col) = image.coeffs[row];
  }
  return m;
}

long WedgeModule::coefficient(const WedgeVector& v,
                              std::span<const int> raw) const {
  if (v.coeffs.size() != dim()) throw std::invalid_argument("bad vector");
  const auto norm = wedge_normalize(raw);
  if (!norm) return 0;
  const auto& [sign, sorted] = *norm;
  const long value = v.coeffs[position(sorted)];
  return sign == 1 ? value : fp_neg(value, p_);
}

nlohmann::json WedgeModule::vector_to_json(const WedgeVector& v) const {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t pos = 0; pos < dim(); ++pos) {
    if (v.coeffs[pos] == 0) continue;
    terms.push_back({{"indices", basis_[pos].indices},
                     {"coeff", v.coeffs[pos]}});
  }
  return {{"n", n_}, {"p", p_}, {"r", r_}, {"terms", std::move(terms)}};
}

HookModule::HookModule(long p, int n, int r) : WedgeModule(p, n, r, n - 1) {
  if (n % p != 0)
    throw std::invalid_argument("hook module needs p dividing n");
  if (r < 0 || r > n - 2)
    throw std::invalid_argument("r out of range (zero module)");
  if (r >= static_cast<int>(p))
    throw std::invalid_argument("r must be at most p-1");
}

std::string HookModule::name() const {
  std::ostringstream os;
  os << "D[(" << n_ - r_;
  if (r_ > 0) os << ",1^" << r_;
  os << ")]";
  return os.str();
}

std::vector<std::pair<int, long>> HookModule::natural_terms(
    const Permutation& sigma, int i) const {
  // sigma·e_i = e_{sigma(i)} - e_{sigma(1)}, with e_1 = 0 and
  // e_n = -(e_2 + ⋯ + e_{n-1})
  std::vector<long> dense(n_, 0);  // slot j-2 holds the coefficient of e_j
  auto add = [&](int j, long c) {
    if (j == 1) return;
    if (j == n_) {
      for (int t = 2; t <= n_ - 1; ++t)
        dense[t - 2] = fp_sub(dense[t - 2], c, p_);
      return;
    }
    dense[j - 2] = fp_add(dense[j - 2], fp_reduce(c, p_), p_);
  };
  add(sigma(i), 1);
  add(sigma(1), p_ - 1);
  std::vector<std::pair<int, long>> terms;
  for (int j = 2; j <= n_ - 1; ++j)
    if (dense[j - 2] != 0) terms.emplace_back(j, dense[j - 2]);
  return terms;
}

std::vector<long> HookModule::natural_image(const Permutation& sigma,
                                            int i) const {
  if (i < 2 || i > n_ - 1) throw std::invalid_argument("index out of range");
  if (sigma.degree() != n_) throw std::invalid_argument("degree mismatch");
  std::vector<long> v(n_ - 2, 0);
  for (const auto& [j, c] : natural_terms(sigma, i)) v[j - 2] = c;
  return v;
}

std::size_t HookModule::special_e_position() const {
  if (r_ != static_cast<int>(p_) - 1)
    throw std::invalid_argument("e = e_2∧⋯∧e_p needs r = p-1");
  std::vector<int> tuple(r_);
  for (int i = 0; i < r_; ++i) tuple[i] = 2 + i;
  return position(WedgeIndex{tuple});
}

WedgeVector HookModule::special_e() const {
  return basis_element(special_e_position());
}

SpechtHookModule::SpechtHookModule(long p, int n, int r)
    : WedgeModule(p, n, r, n) {
  if (r < 0 || r > n - 1) throw std::invalid_argument("r out of range");
}

std::string SpechtHookModule::name() const {
  std::ostringstream os;
  if (n_ % p_ != 0 && r_ <= static_cast<int>(p_) - 1) {
    os << "D[(" << n_ - r_;
    if (r_ > 0) os << ",1^" << r_;
    os << ")]";
  } else {
    os << "S[(" << n_ - r_;
    if (r_ > 0) os << ",1^" << r_;
    os << ")]";
  }
  return os.str();
}

std::vector<std::pair<int, long>> SpechtHookModule::natural_terms(
    const Permutation& sigma, int i) const {
  // sigma·f_i = f_{sigma(i)} - f_{sigma(1)}, with f_1 = 0
  std::vector<std::pair<int, long>> terms;
  const int ji = sigma(i);
  const int j1 = sigma(1);
  if (ji == j1) return terms;
  if (ji != 1) terms.emplace_back(ji, 1);
  if (j1 != 1) terms.emplace_back(j1, p_ - 1);
  return terms;
}

long lambda_hat(const WedgeModule& m, const WedgeVector& v, int k, int x) {
  const int p = static_cast<int>(m.prime());
  if (k < 2 || k > p) throw std::invalid_argument("k out of range");
  std::vector<int> raw;
  for (int t = 2; t <= p; ++t)
    if (t != k) raw.push_back(t);
  raw.push_back(x);
  return m.coefficient(v, raw);
}

long lambda_hat2(const WedgeModule& m, const WedgeVector& v, int k, int l,
                 int x, int y) {
  const int p = static_cast<int>(m.prime());
  if (!(2 <= k && k < l && l <= p))
    throw std::invalid_argument("need 2 ≤ k < l ≤ p");
  std::vector<int> raw;
  for (int t = 2; t <= p; ++t)
    if (t != k && t != l) raw.push_back(t);
  raw.push_back(x);
  raw.push_back(y);
  return m.coefficient(v, raw);
}

long lambda_e(const WedgeModule& m, const WedgeVector& v) {
  const int p = static_cast<int>(m.prime());
  std::vector<int> raw;
  for (int t = 2; t <= p; ++t) raw.push_back(t);
  return m.coefficient(v, raw);
}

}  // namespace hookvert
