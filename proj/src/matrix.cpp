#include "hookvert/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hookvert/kernels.hpp"

namespace hookvert {

FpMatrix::FpMatrix(long p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  check_prime(p);
}

FpMatrix FpMatrix::identity(long p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(long p,
                             const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = fp_reduce(rows[i][j], p);
  }
  return m;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
  if (p_ != other.p_ || rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = fp_add(data_[i], other.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
  if (p_ != other.p_ || rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = fp_sub(data_[i], other.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  return kernels::mul_parallel(*this, other);
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](long x) { return x == 0; });
}

std::vector<long> FpMatrix::apply(std::span<const long> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<long> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc += static_cast<long long>((*this)(i, j)) * v[j];
    out[i] = fp_reduce(acc, p_);
  }
  return out;
}

FpMatrix FpMatrix::rref() const {
  FpMatrix work = *this;
  auto pivots =
      kernels::rref_inplace_parallel(p_, rows_, cols_, work.data_.data());
  FpMatrix out(p_, pivots.size(), cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = work(i, j);
  return out;
}

std::size_t FpMatrix::rank() const {
  FpMatrix work = *this;
  return kernels::rref_inplace_parallel(p_, rows_, cols_, work.data_.data())
      .size();
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  FpMatrix aug(p_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1 % p_;
  }
  FpMatrix red = aug.rref();
  if (red.rows() != rows_) throw std::domain_error("matrix not invertible");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (red(i, j) != (i == j ? 1 % p_ : 0))
        throw std::domain_error("matrix not invertible");
  FpMatrix inv(p_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = red(i, cols_ + j);
  return inv;
}

FpMatrix FpMatrix::stacked(const FpMatrix& other) const {
  if (p_ != other.p_ || cols_ != other.cols_)
    throw std::invalid_argument("shape mismatch");
  FpMatrix out(p_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(),
            out.data_.begin() + static_cast<long>(data_.size()));
  return out;
}

nlohmann::json FpMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back((*this)(i, j));
    entries.push_back(std::move(row));
  }
  return {{"p", p_}, {"entries", std::move(entries)}};
}

FpMatrix FpMatrix::from_json(const nlohmann::json& j) {
  const long p = j.at("p").get<long>();
  std::vector<std::vector<long>> rows;
  for (const auto& row : j.at("entries"))
    rows.push_back(row.get<std::vector<long>>());
  return from_rows(p, rows);
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

}  // namespace hookvert
