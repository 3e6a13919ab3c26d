#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tpnf/bilinear_map.hpp"
#include "tpnf/execution.hpp"

namespace tpnf {

enum class Identity {
  commutative,
  associative,
  antisymmetric,
  jacobi,
  leibniz,
  transposed_leibniz,
  mixed_trivial,
};

std::string to_string(Identity id);

/// First failing basis triple of an identity and its residual. Pair
/// identities (commutative, antisymmetric) leave triple[2] = 0.
struct Witness {
  Identity identity;
  std::array<int, 3> triple;
  Vector residual;
};

/// Flags left empty were not evaluated. A flag is false iff a witness for
/// that identity is present.
struct IdentityReport {
  std::optional<bool> commutative;
  std::optional<bool> associative;
  std::optional<bool> antisymmetric;
  std::optional<bool> jacobi;
  std::optional<bool> leibniz;
  std::optional<bool> transposed_leibniz;
  std::optional<bool> mixed_trivial;
  std::vector<Witness> witnesses;

  std::optional<bool> flag(Identity id) const;
  const Witness* witness(Identity id) const;
  /// Fills flags of `other` that are set, appending its witnesses.
  void merge(const IdentityReport& other);
};

/// An algebra with a commutative-associative candidate `dot` and a candidate
/// Lie bracket on the same space.
struct AlgebraPair {
  BilinearMap dot;
  BilinearMap bracket;
};

/// commutative, associative.
IdentityReport check_product(const BilinearMap& dot, Execution exec = Execution::parallel);
/// antisymmetric, jacobi.
IdentityReport check_bracket(const BilinearMap& bracket, Execution exec = Execution::parallel);
/// leibniz:            [x, y.z] - [x, y].z - y.[x, z]
/// transposed_leibniz: 2 z.[x, y] - [z.x, y] - [x, z.y]
/// mixed_trivial:      x.[y, z] and [x.y, z] (the first nonzero is recorded)
IdentityReport check_compat(const AlgebraPair& pair, Execution exec = Execution::parallel);

/// All seven flags.
IdentityReport check_all(const AlgebraPair& pair, Execution exec = Execution::parallel);

bool is_poisson(const AlgebraPair& pair, Execution exec = Execution::parallel);
bool is_transposed_poisson(const AlgebraPair& pair, Execution exec = Execution::parallel);
bool is_poisson(const IdentityReport& report);
bool is_transposed_poisson(const IdentityReport& report);

/// Residuals on arbitrary vectors, used to cross-check the basis-triple
/// reduction.
Vector residual(Identity id, const AlgebraPair& pair, const Vector& x, const Vector& y,
                const Vector& z);

}  // namespace tpnf
