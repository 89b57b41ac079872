#ifndef HOOKVERT_KERNELS_HPP
#define HOOKVERT_KERNELS_HPP

#include "hookvert/matrix.hpp"

// Hot dense kernels. Each has a plain serial reference implementation and an
// OpenMP-parallel one; the two must agree bit for bit, and the test suite
// checks that they do. FpMatrix methods dispatch to the parallel versions,
// which fall back to the serial path below a size threshold.

namespace hookvert::kernels {

FpMatrix mul_serial(const FpMatrix& a, const FpMatrix& b);
FpMatrix mul_parallel(const FpMatrix& a, const FpMatrix& b);

/// In-place Gauss-Jordan elimination on row-major data; returns the pivot
/// columns. Zero rows are left at the bottom, not removed.
std::vector<std::size_t> rref_inplace_serial(long p, std::size_t rows,
                                             std::size_t cols, long* data);
std::vector<std::size_t> rref_inplace_parallel(long p, std::size_t rows,
                                               std::size_t cols, long* data);

}  // namespace hookvert::kernels

#endif
