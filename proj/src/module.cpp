#include "hookvert/module.hpp"

#include <stdexcept>

namespace hookvert {

NaturalPermModule::NaturalPermModule(long p, int n) : p_(p), n_(n) {
  check_prime(p);
  if (n < 1) throw std::invalid_argument("degree must be positive");
}

FpMatrix NaturalPermModule::action_matrix(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw std::invalid_argument("degree mismatch");
  FpMatrix m(p_, dim(), dim());
  for (int i = 1; i <= n_; ++i) m(sigma(i) - 1, i - 1) = 1;
  return m;
}

TrivialModule::TrivialModule(long p, int n) : p_(p), n_(n) {
  check_prime(p);
  if (n < 1) throw std::invalid_argument("degree must be positive");
}

FpMatrix TrivialModule::action_matrix(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw std::invalid_argument("degree mismatch");
  return FpMatrix::identity(p_, 1);
}

}  // namespace hookvert
