#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "explab/errors.hpp"
#include "explab/exactla/integer.hpp"
#include "explab/exactla/rational.hpp"

namespace explab {

// Dense row-major matrix. Empty shapes (0 x n, m x 0) are valid.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix entry count " + std::to_string(data_.size()) +
                           " does not match shape " + std::to_string(rows_) +
                           "x" + std::to_string(cols_));
    }
  }

  // Rows must have equal length. Cannot express 0-row shapes with nonzero
  // width; use the (rows, cols) constructor for those.
  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return std::span<T>(data_.data() + i * cols_, cols_);
  }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_.data() + i * cols_, cols_);
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return std::vector<T>(r.begin(), r.end());
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  const std::vector<T>& entries() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix select_rows(std::span<const std::size_t> indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t r = 0; r < indices.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(indices[r], j);
    return out;
  }

  Matrix select_cols(std::span<const std::size_t> indices) const {
    Matrix out(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < indices.size(); ++c)
        out(i, c) = (*this)(i, indices[c]);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matrix with " + std::to_string(a.cols()) +
                         " columns applied to vector of length " +
                         std::to_string(x.size()));
  }
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) acc += a(i, j) * x[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  return a * std::span<const T>(x);
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(std::span<const Integer> v);
// Returns nullopt if any entry has a nontrivial denominator.
std::optional<IntVector> to_integer(std::span<const Rational> v);

Integer l1_norm(std::span<const Integer> v);
Rational l1_norm(std::span<const Rational> v);
bool is_zero_vector(std::span<const Integer> v);
bool is_zero_vector(std::span<const Rational> v);

// Integer matrix-vector product with a rational vector.
RatVector apply(const IntMatrix& a, std::span<const Rational> x);

// Divides by the gcd of the entries and makes the first nonzero entry
// positive. The zero vector is returned unchanged.
IntVector primitive_direction(std::span<const Integer> v);
// Smallest positive multiple of a rational vector that is integral.
IntVector clear_denominators(std::span<const Rational> v);

std::string format_vector(std::span<const Integer> v);
std::string format_vector(std::span<const Rational> v);

}  // namespace explab
