#pragma once

#include <cstddef>
#include <vector>

#include "fractiso/rational.hpp"

namespace fractiso {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// The all-ones matrix J scaled by `value`.
  static RationalMatrix filled(std::size_t rows, std::size_t cols, const Rational& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& data() const { return data_; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;

  std::vector<Rational> row_sums() const;
  std::vector<Rational> col_sums() const;

  /// Square, nonnegative, every row and column sums to exactly 1.
  bool is_doubly_stochastic() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace fractiso
