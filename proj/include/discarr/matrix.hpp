#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "discarr/rational.hpp"

namespace discarr {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  /// Builds a matrix from equally long rows. Throws DimensionError on ragged input.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty = 0);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  RatVector row_vector(std::size_t i) const;
  RatVector col_vector(std::size_t j) const;

  /// Rows selected by 0-based index, in the given order.
  RatMatrix select_rows(std::span<const std::size_t> idx) const;

  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace discarr
