#include "fractiso/matrix.hpp"

#include <stdexcept>

namespace fractiso {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::filled(std::size_t rows, std::size_t cols, const Rational& value) {
  RationalMatrix m(rows, cols);
  for (auto& x : m.data_) x = value;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

std::vector<Rational> RationalMatrix::row_sums() const {
  std::vector<Rational> s(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s[r] += (*this)(r, c);
  return s;
}

std::vector<Rational> RationalMatrix::col_sums() const {
  std::vector<Rational> s(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s[c] += (*this)(r, c);
  return s;
}

bool RationalMatrix::is_doubly_stochastic() const {
  if (rows_ != cols_) return false;
  for (const auto& x : data_)
    if (sgn(x) < 0) return false;
  for (const auto& s : row_sums())
    if (s != 1) return false;
  for (const auto& s : col_sums())
    if (s != 1) return false;
  return true;
}

}  // namespace fractiso
