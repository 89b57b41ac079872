#ifndef HOOKVERT_PERM_HPP
#define HOOKVERT_PERM_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hookvert {

/// Permutation of {1,…,n}. Composition is right to left:
/// (sigma * tau)(i) = sigma(tau(i)), so (1,2)*(2,3) = (1,2,3).
class Permutation {
 public:
  /// Identity on {1,…,degree}.
  explicit Permutation(int degree);

  /// images[i-1] = sigma(i); must be a bijection of {1,…,n}.
  static Permutation from_images(std::vector<int> images);

  /// Single cycle (points[0], points[1], …) inside {1,…,degree}.
  static Permutation cycle(std::span<const int> points, int degree);

  /// Parse disjoint-cycle notation, e.g. "(1,4,7)(2,5,8)" or "()" for the
  /// identity. Cycles need not be disjoint; they compose right to left.
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& tau) const;
  Permutation inverse() const;
  Permutation power(long long e) const;
  /// conjugation g * (*this) * g^{-1}
  Permutation conjugated_by(const Permutation& g) const;

  int order() const;
  std::vector<int> support() const;
  bool moves(int point) const { return (*this)(point) != point; }

  /// Nontrivial cycles, each starting at its least point, sorted by least
  /// point.
  std::vector<std::vector<int>> cycles() const;
  /// Disjoint-cycle string, "()" for the identity.
  std::string cycle_string() const;
  /// All nontrivial cycle lengths, descending (the cycle type without fixed
  /// points).
  std::vector<int> cycle_type() const;

  /// Image under relabelling x ↦ x + offset, embedded into {1,…,new_degree}.
  Permutation shifted(int offset, int new_degree) const;
  /// Same mapping on {1,…,degree}, extended by fixed points.
  Permutation extended(int new_degree) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : s.images()) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hookvert

#endif
