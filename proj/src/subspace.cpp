#include "hookvert/subspace.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hookvert {

Subspace::Subspace(long p, std::size_t ambient_dim)
    : basis_(p, 0, ambient_dim) {}

Subspace::Subspace(FpMatrix rref_basis) : basis_(std::move(rref_basis)) {}

Subspace Subspace::full(long p, std::size_t ambient_dim) {
  return Subspace(FpMatrix::identity(p, ambient_dim));
}

Subspace Subspace::span_of(long p, std::size_t ambient_dim,
                           const std::vector<std::vector<long>>& vectors) {
  if (vectors.empty()) return Subspace(p, ambient_dim);
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("vector length mismatch");
  return Subspace(FpMatrix::from_rows(p, vectors).rref());
}

Subspace Subspace::row_space(const FpMatrix& m) { return Subspace(m.rref()); }

bool Subspace::contains(std::span<const long> v) const {
  return coordinates(v).has_value();
}

std::optional<std::vector<long>> Subspace::coordinates(
    std::span<const long> v) const {
  if (v.size() != ambient_dim())
    throw std::invalid_argument("vector length mismatch");
  const long p = basis_.p();
  std::vector<long> rem(v.begin(), v.end());
  std::vector<long> coords(dim(), 0);
  // Basis is RREF: eliminate against each row at its pivot column.
  std::size_t col = 0;
  for (std::size_t r = 0; r < dim(); ++r) {
    while (col < ambient_dim() && basis_(r, col) == 0) ++col;
    const long c = rem[col];
    if (c != 0) {
      coords[r] = c;
      for (std::size_t j = col; j < ambient_dim(); ++j)
        rem[j] = fp_sub(rem[j], fp_mul(c, basis_(r, j), p), p);
    }
  }
  for (long x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

std::vector<long> Subspace::from_coordinates(
    std::span<const long> coords) const {
  if (coords.size() != dim())
    throw std::invalid_argument("coordinate length mismatch");
  const long p = basis_.p();
  std::vector<long> out(ambient_dim(), 0);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coords[r] == 0) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      out[j] = fp_add(out[j], fp_mul(coords[r], basis_(r, j), p), p);
  }
  return out;
}

bool Subspace::coordinate_vanishes_on(std::size_t index) const {
  if (index >= ambient_dim()) throw std::invalid_argument("index out of range");
  for (std::size_t r = 0; r < dim(); ++r)
    if (basis_(r, index) != 0) return false;
  return true;
}

nlohmann::json Subspace::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < ambient_dim(); ++j) row.push_back(basis_(i, j));
    rows.push_back(std::move(row));
  }
  return {{"p", p()}, {"ambient", ambient_dim()}, {"basis", std::move(rows)}};
}

namespace {
void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.p() != b.p()) throw std::invalid_argument("modulus mismatch");
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
}
}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::row_space(a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const long p = a.p();
  const std::size_t n = a.ambient_dim();
  // Zassenhaus: reduce [[A|A],[B|0]]; rows with zero left half carry the
  // intersection in their right half.
  FpMatrix block(p, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block(i, j) = a.basis()(i, j);
      block(i, n + j) = a.basis()(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis()(i, j);
  FpMatrix red = block.rref();
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < red.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      left_zero = red(i, j) == 0;
    if (!left_zero) continue;
    std::vector<long> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = red(i, n + j);
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(p, n, rows);
}

Subspace kernel(const FpMatrix& m) {
  const long p = m.p();
  const std::size_t n = m.cols();
  FpMatrix red = m.rref();
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_of_row(red.rows());
  {
    std::size_t col = 0;
    for (std::size_t r = 0; r < red.rows(); ++r) {
      while (col < n && red(r, col) == 0) ++col;
      pivot_of_row[r] = col;
      is_pivot[col] = true;
    }
  }
  std::vector<std::vector<long>> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long> v(n, 0);
    v[free] = 1 % p;
    for (std::size_t r = 0; r < red.rows(); ++r)
      v[pivot_of_row[r]] = fp_neg(red(r, free), p);
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(p, n, rows);
}

}  // namespace hookvert
