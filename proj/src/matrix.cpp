#include "tpnf/matrix.hpp"

#include <utility>

#include "tpnf/errors.hpp"

namespace tpnf {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix size");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  int cols = static_cast<int>(columns.size());
  int rows = cols == 0 ? 0 : static_cast<int>(columns.front().size());
  Matrix m(rows, cols);
  for (int c = 1; c <= cols; ++c) {
    const Vector& col = columns[c - 1];
    if (static_cast<int>(col.size()) != rows) throw InputError("ragged column list");
    for (int r = 1; r <= rows; ++r) m(r, c) = col[r - 1];
  }
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(static_cast<std::size_t>(rows_));
  for (int r = 1; r <= rows_; ++r) v[r - 1] = (*this)(r, c);
  return v;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) return std::nullopt;
  const int n = rows_;
  Matrix work = *this;
  Matrix inv = identity(n);
  for (int c = 1; c <= n; ++c) {
    int pivot = 0;
    for (int r = c; r <= n; ++r) {
      if (sgn(work(r, c)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == 0) return std::nullopt;
    if (pivot != c) {
      for (int k = 1; k <= n; ++k) {
        std::swap(work(pivot, k), work(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    Scalar scale = 1 / work(c, c);
    for (int k = 1; k <= n; ++k) {
      work(c, k) *= scale;
      inv(c, k) *= scale;
    }
    for (int r = 1; r <= n; ++r) {
      if (r == c || sgn(work(r, c)) == 0) continue;
      Scalar f = work(r, c);
      for (int k = 1; k <= n; ++k) {
        work(r, k) -= f * work(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (int r = 1; r <= a.rows_; ++r) {
    for (int k = 1; k <= a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (int c = 1; c <= b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  }
  return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.cols_) throw InputError("matrix/vector shape mismatch");
  Vector y(static_cast<std::size_t>(a.rows_));
  for (int c = 1; c <= a.cols_; ++c) {
    if (sgn(x[c - 1]) == 0) continue;
    for (int r = 1; r <= a.rows_; ++r) y[r - 1] += a(r, c) * x[c - 1];
  }
  return y;
}

}  // namespace tpnf
