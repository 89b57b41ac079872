#ifndef HOOKVERT_MATRIX_HPP
#define HOOKVERT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookvert/fp.hpp"

namespace hookvert {

/// Dense matrix over GF(p), row major, entries canonical in [0, p).
class FpMatrix {
 public:
  FpMatrix(long p, std::size_t rows, std::size_t cols);
  static FpMatrix identity(long p, std::size_t n);
  static FpMatrix from_rows(long p,
                            const std::vector<std::vector<long>>& rows);

  long p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  long operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  long& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::span<const long> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  bool operator==(const FpMatrix& other) const = default;

  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix operator-(const FpMatrix& other) const;
  FpMatrix operator*(const FpMatrix& other) const;

  FpMatrix transpose() const;
  bool is_zero() const;

  /// m · v for a column vector v of length cols().
  std::vector<long> apply(std::span<const long> v) const;

  /// Unique reduced row echelon form with zero rows dropped.
  FpMatrix rref() const;
  std::size_t rank() const;
  /// Inverse of a square invertible matrix; throws std::domain_error
  /// otherwise.
  FpMatrix inverse() const;

  /// Rows of `other` appended below this matrix.
  FpMatrix stacked(const FpMatrix& other) const;

  nlohmann::json to_json() const;
  static FpMatrix from_json(const nlohmann::json& j);
  std::string to_string() const;

 private:
  long p_;
  std::size_t rows_, cols_;
  std::vector<long> data_;
};

}  // namespace hookvert

#endif
