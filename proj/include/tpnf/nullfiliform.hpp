#pragma once

#include "tpnf/bilinear_map.hpp"
#include "tpnf/matrix.hpp"

namespace tpnf {

/// mu_0^n: e_i . e_j = e_{i+j} for i + j <= n, all other products zero.
BilinearMap build_mu0(int n);

/// First column (A_1, ..., A_n) of an automorphism of mu_0^n, i.e.
/// phi(e_1) = sum_i A_i e_i. A_1 must be nonzero.
class AutomorphismParams {
 public:
  explicit AutomorphismParams(Vector values);

  /// (1, 0, ..., 0).
  static AutomorphismParams identity(int n);
  /// A_1 = 1, A_k = value, everything else zero.
  static AutomorphismParams shift(int n, int k, const Scalar& value);
  /// A_1 = c, everything else zero: e_i -> c^i e_i.
  static AutomorphismParams scaling(int n, const Scalar& c);

  int size() const { return static_cast<int>(values_.size()); }
  /// A_i, 1-based.
  const Scalar& operator[](int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const Vector& values() const { return values_; }

  friend bool operator==(const AutomorphismParams&, const AutomorphismParams&) = default;

 private:
  Vector values_;
};

/// sum over compositions k_1 + ... + k_parts = total (k_m >= 1) of
/// A_{k_1} * ... * A_{k_parts}.
Scalar composition_sum(const AutomorphismParams& a, int parts, int total);

/// Column i is phi(e_i) = sum_{j >= i} composition_sum(A, i, j) e_j.
/// Throws InputError when params.size() != n.
Matrix automorphism_matrix(const AutomorphismParams& params, int n);

/// Reads the parameters back from column 1 of an automorphism matrix.
AutomorphismParams params_of(const Matrix& automorphism);

/// P invertible and change_of_basis(dot, P) == dot.
bool is_automorphism(const BilinearMap& dot, const Matrix& p);

}  // namespace tpnf
