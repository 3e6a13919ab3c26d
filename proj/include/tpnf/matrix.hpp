#pragma once

#include <optional>

#include "tpnf/scalar.hpp"

namespace tpnf {

/// Dense rational matrix with 1-based (row, col) access.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  /// Builds a matrix whose j-th column is columns[j-1].
  static Matrix from_columns(const std::vector<Vector>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(int r, int c) { return data_[index(r, c)]; }
  const Scalar& operator()(int r, int c) const { return data_[index(r, c)]; }

  Vector column(int c) const;

  /// Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<Matrix> inverse() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace tpnf
