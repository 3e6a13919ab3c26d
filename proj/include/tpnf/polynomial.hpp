#pragma once

#include <map>
#include <string>
#include <vector>

#include "tpnf/matrix.hpp"
#include "tpnf/scalar.hpp"

namespace tpnf {

/// Multivariate polynomial with rational coefficients in variables
/// x_1..x_m. A monomial is the sorted multiset of its variable indices.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  Polynomial() = default;

  static Polynomial constant(const Scalar& c);
  static Polynomial variable(int index);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  /// Largest variable index appearing, 0 for constants.
  int max_variable() const;

  void add_term(Monomial m, const Scalar& c);
  Scalar evaluate(const Vector& point) const;
  /// Replaces x_i by images[i-1].
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Scales so the leading (first in monomial order) coefficient is 1.
  Polynomial monic() const;

  /// Symmetric matrix M of a homogeneous quadratic: q(x) = x^T M x, size
  /// `vars`. Throws InputError for other degrees.
  Matrix quadratic_form(int vars) const;

  /// e.g. "2*c1^2 - c1*c3 + 1/2*c2".
  std::string to_string(const std::string& var = "c") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial& a, const Polynomial& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  std::map<Monomial, Scalar> terms_;
};

}  // namespace tpnf
