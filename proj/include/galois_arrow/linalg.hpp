#pragma once

#include <cstddef>
#include <vector>

#include "galois_arrow/field.hpp"

namespace galois_arrow {

/// Dense row-major matrix over one finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Element& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

using Vector = std::vector<Element>;

struct NullSpace {
  std::size_t rank = 0;
  /// One vector per free column, in increasing column order. Each basis
  /// vector has a 1 in its free column and 0 in the other free columns.
  std::vector<Vector> basis;
};

/// Gauss-Jordan elimination with exact field arithmetic. Pivots are taken at
/// the leftmost remaining column, from the lowest row index holding a nonzero.
/// Throws EmptyMatrix, MixedFields.
NullSpace solve_homogeneous(const Matrix& matrix);

Vector multiply(const Matrix& matrix, const Vector& v);

}  // namespace galois_arrow
