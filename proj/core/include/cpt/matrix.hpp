#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cpt/integer.hpp"

namespace cpt {

/// Dense integer matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Exact determinant (fraction-free Bareiss elimination). Throws ShapeError
  /// for non-square input.
  Integer det() const;

  /// Inverse of a matrix with determinant +-1. Throws ShapeError otherwise.
  Matrix unimodular_inverse() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace cpt
