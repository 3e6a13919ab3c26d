#pragma once

#include <utility>
#include <vector>

#include "tpnf/scalar.hpp"

namespace tpnf {

/// Sparse linear form over unknowns 0..unknowns-1, as (unknown, coefficient)
/// pairs. Duplicated unknowns are summed when the row enters a system.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Homogeneous system `row . x = 0` for every row.
struct LinearSystem {
  int unknowns = 0;
  std::vector<SparseRow> rows;
};

/// Reduced row-echelon form computed by fraction-free Gauss-Jordan
/// elimination. Rows are integer-valued and primitive; pivot_columns[r] is the
/// pivot of rows[r], and every other row is zero in that column.
struct EchelonForm {
  int unknowns = 0;
  std::vector<int> pivot_columns;
  std::vector<std::vector<std::pair<int, mpz_class>>> rows;

  int rank() const { return static_cast<int>(rows.size()); }
};

/// Denominators are cleared row by row; at each column the active row with
/// the largest-magnitude integer entry is used as pivot.
EchelonForm row_reduce(const LinearSystem& system);

/// Rational basis of the solution space, one vector per free unknown (in
/// increasing order) with that unknown set to 1.
std::vector<Vector> nullspace(const LinearSystem& system);

/// Reduced echelon basis of span(vectors), each normalized to pivot 1.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors);
int rank(const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& vectors, const Vector& v);

/// Dense rows -> sparse system.
LinearSystem to_system(const std::vector<Vector>& rows, int unknowns);

}  // namespace tpnf
