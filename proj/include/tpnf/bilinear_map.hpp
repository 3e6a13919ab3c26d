#pragma once

#include <span>
#include <vector>

#include "tpnf/matrix.hpp"
#include "tpnf/scalar.hpp"

namespace tpnf {

/// Largest supported dimension.
inline constexpr int kMaxDim = 64;

/// One structure constant: B(e_i, e_j) has coefficient c at e_k (1-based).
struct Entry {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar c;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Bilinear product on an n-dimensional space, stored sparsely as the list of
/// nonzero (k, c) terms of every B(e_i, e_j).
class BilinearMap {
 public:
  struct Term {
    int k;
    Scalar c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit BilinearMap(int dim);

  int dim() const { return dim_; }

  /// Nonzero terms of B(e_i, e_j), sorted by k.
  const std::vector<Term>& product(int i, int j) const { return table_[slot(i, j)]; }
  Scalar coeff(int i, int j, int k) const;
  /// Adds c to the coefficient at (i, j, k).
  void add(int i, int j, int k, const Scalar& c);

  /// All nonzero entries in lexicographic (i, j, k) order.
  std::vector<Entry> entries() const;
  bool is_zero() const;

  /// B(x, y) = sum_ij x_i y_j B(e_i, e_j).
  Vector apply(const Vector& x, const Vector& y) const;
  /// B(e_i, y).
  Vector apply_left(int i, const Vector& y) const;
  /// B(e_i, e_j) as a dense vector.
  Vector apply_basis(int i, int j) const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  std::size_t slot(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j - 1);
  }
  void check_index(int idx) const;

  int dim_;
  std::vector<std::vector<Term>> table_;
};

/// Builds the tensor from entries; duplicates are summed. Throws InputError
/// when an index leaves 1..dim or dim leaves 1..kMaxDim.
BilinearMap make_bilinear_map(int dim, std::span<const Entry> entries);

/// B'(x, y) = P^{-1} B(P x, P y). With this convention the action composes
/// on the right: change_of_basis(B, P * Q) = change_of_basis(change_of_basis(B, P), Q).
/// Throws InputError when P is singular or has the wrong size.
BilinearMap change_of_basis(const BilinearMap& b, const Matrix& p);

/// Linear combination sum_m coeffs[m] * maps[m] of maps of equal dimension.
BilinearMap linear_combination(std::span<const BilinearMap> maps, const Vector& coeffs);

}  // namespace tpnf
