#ifndef HOOKVERT_SUBSPACE_HPP
#define HOOKVERT_SUBSPACE_HPP

#include <optional>
#include <span>
#include <vector>

#include "hookvert/matrix.hpp"

namespace hookvert {

/// Subspace of GF(p)^ambient, stored as a reduced-row-echelon basis with no
/// zero rows. Equality of subspaces is equality of basis matrices.
class Subspace {
 public:
  /// Zero subspace.
  Subspace(long p, std::size_t ambient_dim);
  static Subspace full(long p, std::size_t ambient_dim);
  /// Span of the given vectors.
  static Subspace span_of(long p, std::size_t ambient_dim,
                          const std::vector<std::vector<long>>& vectors);
  /// Row space of a matrix.
  static Subspace row_space(const FpMatrix& m);

  long p() const { return basis_.p(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }

  bool operator==(const Subspace& other) const = default;

  bool contains(std::span<const long> v) const;
  /// Coordinates of v against the basis rows, if v lies in the subspace.
  std::optional<std::vector<long>> coordinates(std::span<const long> v) const;
  /// coords · basis.
  std::vector<long> from_coordinates(std::span<const long> coords) const;

  /// True iff every element of the subspace has coefficient 0 at `index`,
  /// i.e. the whole basis column at `index` is zero.
  bool coordinate_vanishes_on(std::size_t index) const;

  nlohmann::json to_json() const;

 private:
  explicit Subspace(FpMatrix rref_basis);
  FpMatrix basis_;
};

/// Smallest subspace containing both; requires equal p and ambient dim.
Subspace sum(const Subspace& a, const Subspace& b);
/// Intersection (Zassenhaus); requires equal p and ambient dim.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Null space {x : m·x = 0} as a subspace of GF(p)^cols.
Subspace kernel(const FpMatrix& m);

}  // namespace hookvert

#endif
