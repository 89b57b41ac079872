#ifndef HOOKVERT_MODULE_HPP
#define HOOKVERT_MODULE_HPP

#include <string>

#include "hookvert/matrix.hpp"
#include "hookvert/perm.hpp"

namespace hookvert {

/// A finite-dimensional GF(p)-module with an S_n-action, presented through
/// the matrices of group elements on a distinguished basis. Column-vector
/// convention: action_matrix(sigma) * coords.
class FpModule {
 public:
  virtual ~FpModule() = default;
  virtual long prime() const = 0;
  /// Degree n of the acting symmetric group.
  virtual int degree() const = 0;
  virtual std::size_t dim() const = 0;
  virtual FpMatrix action_matrix(const Permutation& sigma) const = 0;
  virtual std::string name() const = 0;
};

/// Permutation module on ω_1,…,ω_n.
class NaturalPermModule final : public FpModule {
 public:
  NaturalPermModule(long p, int n);
  long prime() const override { return p_; }
  int degree() const override { return n_; }
  std::size_t dim() const override { return static_cast<std::size_t>(n_); }
  FpMatrix action_matrix(const Permutation& sigma) const override;
  std::string name() const override { return "natural-perm"; }

 private:
  long p_;
  int n_;
};

/// One-dimensional trivial module.
class TrivialModule final : public FpModule {
 public:
  TrivialModule(long p, int n);
  long prime() const override { return p_; }
  int degree() const override { return n_; }
  std::size_t dim() const override { return 1; }
  FpMatrix action_matrix(const Permutation& sigma) const override;
  std::string name() const override { return "trivial"; }

 private:
  long p_;
  int n_;
};

}  // namespace hookvert

#endif
