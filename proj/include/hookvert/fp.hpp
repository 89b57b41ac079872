#ifndef HOOKVERT_FP_HPP
#define HOOKVERT_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace hookvert {

// Canonical residues mod a small prime p. All entries everywhere in the
// library are kept in [0, p).

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Largest modulus we accept; keeps products + long accumulations inside
// int64 without per-step reduction.
inline constexpr long kMaxPrime = 1 << 20;

inline void check_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (p > kMaxPrime) throw std::invalid_argument("modulus too large");
}

inline long fp_reduce(long long x, long p) {
  long long r = x % p;
  return static_cast<long>(r < 0 ? r + p : r);
}

inline long fp_add(long a, long b, long p) {
  long s = a + b;
  return s >= p ? s - p : s;
}

inline long fp_sub(long a, long b, long p) {
  long s = a - b;
  return s < 0 ? s + p : s;
}

inline long fp_mul(long a, long b, long p) {
  return static_cast<long>((static_cast<long long>(a) * b) % p);
}

inline long fp_neg(long a, long p) { return a == 0 ? 0 : p - a; }

inline long fp_pow(long a, long long e, long p) {
  long r = 1 % p;
  long base = a;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return r;
}

inline long fp_inv(long a, long p) {
  if (a == 0) throw std::domain_error("inverse of zero");
  return fp_pow(a, p - 2, p);
}

}  // namespace hookvert

#endif
