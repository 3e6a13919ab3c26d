#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpnf/nullfiliform.hpp"
#include "tpnf/tp_structures.hpp"

namespace tpnf {

/// Parameters of the same algebra after the basis change e_i' = phi(e_i),
/// obtained by solving the coefficient relations of [e_1', e_2'] for
/// alpha'_2..alpha'_n in increasing order (the alpha'_t coefficient is A_1^t).
/// Throws InputError on a nonzero alpha1 or a size mismatch.
AlphaParams transform_params(const AlphaParams& alpha, const AutomorphismParams& a);

/// Smallest t with alpha_t != 0.
std::optional<int> first_nonzero(const AlphaParams& alpha);

struct ReductionStep {
  AutomorphismParams automorphism;
  AlphaParams result;
};

struct ReductionTranscript {
  std::vector<ReductionStep> steps;
  std::string note;

  /// Replays every step from `start`; true iff each recorded result is
  /// reproduced exactly.
  bool replays_from(const AlphaParams& start) const;
  /// Product of the step matrices in application order.
  Matrix composite(int n) const;
};

/// Unipotent elimination e_1 -> e_1 + A e_k. Leaves alpha_s and, when
/// s >= 4, possibly alpha_{2s-3}; everything else is cleared. Each A solves
/// "target coefficient after transform_params = 0"; a target whose
/// coefficient does not depend on A is left in place. Throws InputError on
/// the zero vector.
std::pair<AlphaParams, ReductionTranscript> shift_reduce(const AlphaParams& alpha);

struct CanonicalForm {
  enum class Tag { trivial, s2, s3, s };

  Tag tag = Tag::trivial;
  /// First nonzero index (2 for s2, 3 for s3); 0 for trivial.
  int s = 0;
  /// alpha_3 for s3; beta_{2s-3} / beta_s^2 for s when 2s - 3 <= n.
  std::optional<Scalar> modulus;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

std::string to_string(CanonicalForm::Tag tag);

CanonicalForm canonical_form(const AlphaParams& alpha);
/// Canonical form plus the transcript that produced it.
std::pair<CanonicalForm, ReductionTranscript> classify(const AlphaParams& alpha);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Rational automorphism with transform_params(a, *witness) == b, when one
  /// exists without leaving the rationals.
  std::optional<AutomorphismParams> witness;
};

IsomorphismResult are_isomorphic(const AlphaParams& a, const AlphaParams& b);

struct Family {
  CanonicalForm::Tag tag;
  int s = 0;
  bool has_modulus = false;
  /// Representative, e.g. "TP(0,0,1,α)".
  std::string label;
};

/// Pairwise non-isomorphic families of transposed Poisson structures on
/// mu_0^n. Requires 2 <= n <= kMaxDim.
std::vector<Family> classification_table(int n);

/// Rational r with r^k == x, if any.
std::optional<Scalar> rational_root(const Scalar& x, int k);

}  // namespace tpnf
