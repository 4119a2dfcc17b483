#include "galois_arrow/linalg.hpp"

namespace galois_arrow {

NullSpace solve_homogeneous(const Matrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) {
    fail(ErrorCode::EmptyMatrix, "solve_homogeneous on an empty matrix");
  }
  const Element& anchor = matrix(0, 0);
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) common_field(anchor, matrix(r, c));
  }
  const Field& field = *anchor.field();

  Matrix m = matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Element scale = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Element factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  NullSpace out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Vector multiply(const Matrix& matrix, const Vector& v) {
  if (matrix.rows() == 0 || matrix.cols() == 0) fail(ErrorCode::EmptyMatrix, "empty matrix");
  if (v.size() != matrix.cols()) fail(ErrorCode::UsageError, "dimension mismatch");
  Vector out(matrix.rows(), matrix(0, 0).field()->zero());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) out[r] += matrix(r, c) * v[c];
  }
  return out;
}

}  // namespace galois_arrow
