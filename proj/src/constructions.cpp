#include "hookvert/constructions.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hookvert/fp.hpp"

namespace hookvert {

namespace {

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Permutation tower_generator(long p, int j, int d) {
  check_prime(p);
  if (j < 1 || j > d) throw std::invalid_argument("level j out of range");
  const long stride = ipow(p, j - 1);
  const long degree = ipow(p, d);
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  for (long x = 1; x <= stride * p; ++x)
    images[x - 1] =
        static_cast<int>(x + stride <= stride * p ? x + stride
                                                  : x - (p - 1) * stride);
  return Permutation::from_images(std::move(images));
}

Permutation wreath_embed(const std::vector<Permutation>& components,
                         const Permutation& pi) {
  const int p = pi.degree();
  if (static_cast<int>(components.size()) != p)
    throw std::invalid_argument("need one component per point of pi");
  if (components.empty()) return Permutation(0);
  const int q = components.front().degree();
  for (const auto& s : components)
    if (s.degree() != q)
      throw std::invalid_argument("component degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(p) * q);
  for (int a = 1; a <= p; ++a)
    for (int b = 1; b <= q; ++b) {
      const int j = q * (a - 1) + b;
      images[j - 1] = q * (pi(a) - 1) + components[pi(a) - 1](b);
    }
  return Permutation::from_images(std::move(images));
}

PermGroup sylow_tower(long p, int d) {
  check_prime(p);
  if (d < 0) throw std::invalid_argument("negative tower height");
  const int degree = static_cast<int>(ipow(p, d));
  std::vector<Permutation> gens;
  for (int j = 1; j <= d; ++j) gens.push_back(tower_generator(p, j, d));
  PermGroup g(degree, std::move(gens));
  const std::uint64_t exponent =
      d == 0 ? 0
             : static_cast<std::uint64_t>((ipow(p, d) - 1) / (p - 1));
  if (auto order = checked_pow(p, exponent)) g.set_known_order(*order);
  return g;
}

bool sylow_tower_contains(long p, int d, const Permutation& sigma) {
  if (sigma.degree() != ipow(p, d)) return false;
  if (d == 0) return true;
  const long q = ipow(p, d - 1);
  // blocks must be permuted by a power of the p-cycle (1,…,p)
  const int first_image = sigma(1);
  const long shift = (first_image - 1) / q;  // pi(1) = 1 + shift
  for (long a = 1; a <= p; ++a) {
    const long pia = (a - 1 + shift) % p + 1;
    for (long b = 1; b <= q; ++b) {
      const long image = sigma(static_cast<int>(q * (a - 1) + b));
      if ((image - 1) / q + 1 != pia) return false;
    }
  }
  // each component must lie in the next tower down
  for (long a = 1; a <= p; ++a) {
    const long pia = (a - 1 + shift) % p + 1;
    std::vector<int> component(q);
    for (long b = 1; b <= q; ++b)
      component[b - 1] =
          static_cast<int>(sigma(static_cast<int>(q * (a - 1) + b)) -
                           q * (pia - 1));
    if (!sylow_tower_contains(p, d - 1,
                              Permutation::from_images(std::move(component))))
      return false;
  }
  return true;
}

std::uint64_t p_adic_factorial_valuation(std::uint64_t n, long p) {
  std::uint64_t total = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

std::optional<std::uint64_t> checked_pow(long p, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / static_cast<std::uint64_t>(p)) return std::nullopt;
    r *= static_cast<std::uint64_t>(p);
  }
  return r;
}

std::vector<Permutation> GroupDecomposition::generators() const {
  std::vector<Permutation> gens;
  for (const auto& f : factors)
    gens.insert(gens.end(), f.generators.begin(), f.generators.end());
  return gens;
}

std::string GroupDecomposition::shape() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i)
    os << (i ? "×" : "") << factors[i].label;
  return os.str();
}

std::uint64_t GroupDecomposition::order_exponent() const {
  std::uint64_t e = 0;
  for (const auto& f : factors) e += f.order_exponent;
  return e;
}

PermGroup GroupDecomposition::group() const {
  PermGroup g(n, generators());
  if (auto order = checked_pow(p, order_exponent())) g.set_known_order(*order);
  return g;
}

GroupDecomposition sylow_subgroup_sn(int n, long p) {
  check_prime(p);
  if (n < 1) throw std::invalid_argument("n must be positive");
  GroupDecomposition dec{n, p, {}};

  std::vector<int> digits;  // base-p digits of n, least significant first
  for (int rest = n; rest > 0; rest /= static_cast<int>(p))
    digits.push_back(rest % static_cast<int>(p));

  for (int i = 1; i < static_cast<int>(digits.size()); ++i) {
    if (digits[i] == 0) continue;
    const long block = ipow(p, i);
    long lower = 0;  // Σ_{l<i} n_l p^l
    for (int l = 0; l < i; ++l) lower += digits[l] * ipow(p, l);
    for (int j = 1; j <= digits[i]; ++j) {
      const long offset = lower + static_cast<long>(j - 1) * block;
      BlockFactor factor;
      factor.label = "P_" + std::to_string(block);
      factor.p = p;
      factor.level = i;
      factor.index = j;
      factor.offset = static_cast<int>(offset);
      factor.order_exponent =
          static_cast<std::uint64_t>((block - 1) / (p - 1));
      for (int jj = 1; jj <= i; ++jj)
        factor.generators.push_back(
            tower_generator(p, jj, i).shifted(static_cast<int>(offset), n));
      dec.factors.push_back(std::move(factor));
    }
  }
  if (dec.order_exponent() !=
      p_adic_factorial_valuation(static_cast<std::uint64_t>(n), p))
    throw std::logic_error("sylow order mismatch");
  return dec;
}

namespace {

// g_{j,…,d}: spread g_j through the levels above it by conjugate products,
// ∏_i g_l^i · h · g_l^{-i} for l = j+1,…,d.
Permutation spread_generator(long p, int j, int d) {
  Permutation h = tower_generator(p, j, d);
  for (int l = j + 1; l <= d; ++l) {
    const Permutation gl = tower_generator(p, l, d);
    Permutation product(h.degree());
    Permutation gli(h.degree());
    for (long i = 0; i < p; ++i) {
      product = product * (gli * h * gli.inverse());
      gli = gli * gl;
    }
    h = product;
  }
  return h;
}

}  // namespace

PermGroup elem_abelian_tower(long p, int d) {
  check_prime(p);
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const int degree = static_cast<int>(ipow(p, d));
  std::vector<Permutation> gens;
  for (int j = 1; j <= d; ++j) gens.push_back(spread_generator(p, j, d));
  PermGroup g(degree, std::move(gens));
  g.set_known_order(static_cast<std::uint64_t>(ipow(p, d)));
  return g;
}

GroupDecomposition elem_abelian_subgroup_sn(int n, long p,
                                            const std::vector<int>& m) {
  check_prime(p);
  long total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("m_i must be nonnegative");
    total += static_cast<long>(m[i]) * ipow(p, static_cast<int>(i) + 1);
  }
  if (total != n)
    throw std::invalid_argument("decomposition does not sum to n");

  GroupDecomposition dec{n, p, {}};
  for (int i = 1; i <= static_cast<int>(m.size()); ++i) {
    const int mi = m[i - 1];
    if (mi == 0) continue;
    const long block = ipow(p, i);
    long lower = 0;  // Σ_{l<i} m_l p^l with m_0 = 0
    for (int l = 1; l < i; ++l) lower += m[l - 1] * ipow(p, l);
    for (int j = 1; j <= mi; ++j) {
      const long offset = lower + static_cast<long>(j - 1) * block;
      BlockFactor factor;
      factor.label = "E_" + std::to_string(block);
      factor.p = p;
      factor.level = i;
      factor.index = j;
      factor.offset = static_cast<int>(offset);
      factor.order_exponent = static_cast<std::uint64_t>(i);
      const PermGroup tower = elem_abelian_tower(p, i);
      for (const auto& g : tower.generators())
        factor.generators.push_back(g.shifted(static_cast<int>(offset), n));
      dec.factors.push_back(std::move(factor));
    }
  }
  return dec;
}

}  // namespace hookvert
