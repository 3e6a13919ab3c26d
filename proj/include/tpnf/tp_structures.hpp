#pragma once

#include <optional>

#include "tpnf/bilinear_map.hpp"
#include "tpnf/execution.hpp"
#include "tpnf/linalg.hpp"
#include "tpnf/polynomial.hpp"

namespace tpnf {

/// Parameters (alpha_2, ..., alpha_n) of the TP family. alpha1 is only set on
/// values read back from a bracket; a nonzero alpha1 never enters the family.
class AlphaParams {
 public:
  /// `values` holds alpha_2..alpha_n (length n - 1). Requires n >= 2.
  AlphaParams(int n, Vector values, std::optional<Scalar> alpha1 = std::nullopt);

  static AlphaParams zero(int n);
  /// alpha_t = 1, all others zero.
  static AlphaParams indicator(int n, int t);

  int n() const { return n_; }
  /// alpha_t for 2 <= t <= n.
  const Scalar& operator[](int t) const;
  const Vector& values() const { return values_; }
  const std::optional<Scalar>& alpha1() const { return alpha1_; }
  bool has_nonzero_alpha1() const { return alpha1_ && sgn(*alpha1_) != 0; }
  bool is_zero() const;

  /// alpha1 absent and alpha1 = 0 compare equal.
  friend bool operator==(const AlphaParams& a, const AlphaParams& b);

 private:
  int n_;
  Vector values_;
  std::optional<Scalar> alpha1_;
};

/// [e_i, e_j] = (j - i) sum_{t=i+j-1}^{n} alpha_{t-i-j+3} e_t for 3 <= i + j <= n + 1.
/// Throws InputError when alpha1 is nonzero.
BilinearMap build_tp_bracket(const AlphaParams& params);

/// Reads alpha_1..alpha_n off [e_1, e_2] and checks the whole bracket against
/// build_tp_bracket. Throws NotInFamilyError at the first mismatching entry.
AlphaParams extract_alphas(const BilinearMap& bracket);

enum class BracketMode {
  transposed,  ///< 2 z.[x, y] = [z.x, y] + [x, z.y]
  poisson,     ///< [x, y.z] = [x, y].z + y.[x, z]
};

/// Antisymmetric brackets satisfying the mode's identity against a fixed
/// product, plus the Jacobi identity on their general element
/// sum_m c_m basis[m] as homogeneous quadratics in c_1..c_d.
struct SolutionSpace {
  int n = 0;
  BracketMode mode = BracketMode::transposed;
  std::vector<BilinearMap> basis;
  std::vector<Polynomial> residual_constraints;

  int dimension() const { return static_cast<int>(basis.size()); }
};

inline constexpr int kMaxSolveDim = 10;

/// Linear identity system for an antisymmetric bracket against `dot`. Unknown
/// u = pair(i, j) * n + (k - 1) is the coefficient of e_k in [e_i, e_j], i < j,
/// with pairs enumerated lexicographically.
LinearSystem assemble_bracket_system(const BilinearMap& dot, BracketMode mode,
                                     Execution exec = Execution::parallel);
/// Bracket whose free coefficients are given in the unknown layout above.
BilinearMap bracket_from_unknowns(int n, const Vector& unknowns);

/// Jacobi residuals of sum_m c_m basis[m], deduplicated and made monic.
std::vector<Polynomial> jacobi_constraints(const std::vector<BilinearMap>& basis,
                                           Execution exec = Execution::parallel);

/// Solves the mode's system against mu_0^n. Requires 2 <= n <= 10.
SolutionSpace solve_bracket_space(int n, BracketMode mode, Execution exec = Execution::parallel);

/// Same against an arbitrary product.
SolutionSpace solve_bracket_space(const BilinearMap& dot, BracketMode mode,
                                  Execution exec = Execution::parallel);

/// Zero set of the residual constraints inside span(basis), when it is a
/// linear subspace that can be derived by repeatedly imposing l = 0 for every
/// constraint of the form kappa * l^2. Returns a basis of that subspace, or
/// nullopt when some constraint is not of that form.
std::optional<std::vector<BilinearMap>> jacobi_locus(const SolutionSpace& space);

}  // namespace tpnf
