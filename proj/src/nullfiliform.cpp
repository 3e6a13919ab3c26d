#include "tpnf/nullfiliform.hpp"

#include <string>

#include "tpnf/errors.hpp"

namespace tpnf {

BilinearMap build_mu0(int n) {
  BilinearMap dot(n);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j <= n; ++j) dot.add(i, j, i + j, 1);
  }
  return dot;
}

AutomorphismParams::AutomorphismParams(Vector values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("automorphism parameters are empty");
  if (sgn(values_.front()) == 0) throw InputError("automorphism requires A_1 != 0");
}

AutomorphismParams AutomorphismParams::identity(int n) { return scaling(n, 1); }

AutomorphismParams AutomorphismParams::shift(int n, int k, const Scalar& value) {
  if (k < 2 || k > n) throw InputError("shift index outside 2..n");
  Vector v = zero_vector(n);
  v[0] = 1;
  v[k - 1] = value;
  return AutomorphismParams(std::move(v));
}

AutomorphismParams AutomorphismParams::scaling(int n, const Scalar& c) {
  if (n < 1) throw InputError("dimension must be positive");
  Vector v = zero_vector(n);
  v[0] = c;
  return AutomorphismParams(std::move(v));
}

namespace {

// Sum over compositions of `total` into `parts` positive parts, peeling off
// the first part k_1 each time.
Scalar compositions(const Vector& a, int parts, int total) {
  if (parts == 0) return total == 0 ? 1 : 0;
  if (total < parts) return 0;
  Scalar sum = 0;
  for (int k = 1; k <= total - parts + 1 && k <= static_cast<int>(a.size()); ++k) {
    if (sgn(a[k - 1]) == 0) continue;
    Scalar rest = compositions(a, parts - 1, total - k);
    if (sgn(rest) != 0) sum += a[k - 1] * rest;
  }
  return sum;
}

}  // namespace

Scalar composition_sum(const AutomorphismParams& a, int parts, int total) {
  if (parts < 1 || total < 1) throw InputError("composition sizes must be positive");
  return compositions(a.values(), parts, total);
}

Matrix automorphism_matrix(const AutomorphismParams& params, int n) {
  if (params.size() != n) {
    throw InputError("expected " + std::to_string(n) + " automorphism parameters, got " +
                     std::to_string(params.size()));
  }
  // Column i is phi(e_1)^i; build each from the previous one so the
  // composition sums are accumulated rather than re-enumerated.
  Matrix m(n, n);
  Vector power = params.values();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m(j, i) = power[j - 1];
    if (i == n) break;
    Vector next = zero_vector(n);
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= j - i; ++k) {
        if (sgn(params[k]) == 0 || sgn(power[j - k - 1]) == 0) continue;
        next[j - 1] += params[k] * power[j - k - 1];
      }
    }
    power = std::move(next);
  }
  return m;
}

AutomorphismParams params_of(const Matrix& automorphism) {
  return AutomorphismParams(automorphism.column(1));
}

bool is_automorphism(const BilinearMap& dot, const Matrix& p) {
  if (p.rows() != dot.dim() || p.cols() != dot.dim()) return false;
  if (!p.inverse()) return false;
  return change_of_basis(dot, p) == dot;
}

}  // namespace tpnf
