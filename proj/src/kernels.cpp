#include "hookvert/kernels.hpp"

#include <cstddef>
#include <stdexcept>

namespace hookvert::kernels {

namespace {

// Below these sizes the OpenMP fork/join overhead dominates.
constexpr std::size_t kParallelMulThreshold = 64;
constexpr std::size_t kParallelRrefThreshold = 128;

inline void mul_row(const FpMatrix& a, const FpMatrix& b, FpMatrix& c,
                    std::size_t i) {
  const long p = a.p();
  const std::size_t n = a.cols();
  const std::size_t m = b.cols();
  for (std::size_t k = 0; k < n; ++k) {
    const long aik = a(i, k);
    if (aik == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      c(i, j) = fp_reduce(c(i, j) + static_cast<long long>(aik) * b(k, j), p);
    }
  }
}

inline void check_mul_shapes(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw std::invalid_argument("modulus mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
}

}  // namespace

FpMatrix mul_serial(const FpMatrix& a, const FpMatrix& b) {
  check_mul_shapes(a, b);
  FpMatrix c(a.p(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) mul_row(a, b, c, i);
  return c;
}

FpMatrix mul_parallel(const FpMatrix& a, const FpMatrix& b) {
  check_mul_shapes(a, b);
  if (a.rows() < kParallelMulThreshold) return mul_serial(a, b);
  FpMatrix c(a.p(), a.rows(), b.cols());
  const long long nrows = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < nrows; ++i)
    mul_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

namespace {

// Gauss-Jordan step order is identical in both variants, so the reduced
// matrices match entry for entry.
template <bool Parallel>
std::vector<std::size_t> rref_inplace(long p, std::size_t rows,
                                      std::size_t cols, long* data) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && data[sel * cols + col] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(data[sel * cols + j], data[pivot_row * cols + j]);
    }
    const long inv = fp_inv(data[pivot_row * cols + col], p);
    if (inv != 1) {
      for (std::size_t j = col; j < cols; ++j)
        data[pivot_row * cols + j] = fp_mul(data[pivot_row * cols + j], inv, p);
    }
    const long* prow = data + pivot_row * cols;
    const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (Parallel)
    for (long long r = 0; r < nrows; ++r) {
      if (static_cast<std::size_t>(r) == pivot_row) continue;
      long* row = data + r * cols;
      const long factor = row[col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        row[j] = fp_reduce(row[j] - static_cast<long long>(factor) * prow[j], p);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_inplace_serial(long p, std::size_t rows,
                                             std::size_t cols, long* data) {
  return rref_inplace<false>(p, rows, cols, data);
}

std::vector<std::size_t> rref_inplace_parallel(long p, std::size_t rows,
                                               std::size_t cols, long* data) {
  if (rows < kParallelRrefThreshold)
    return rref_inplace<false>(p, rows, cols, data);
  return rref_inplace<true>(p, rows, cols, data);
}

}  // namespace hookvert::kernels
