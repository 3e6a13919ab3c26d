#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the code
// paths it is used to check.

#include <random>

#include "tpnf/bilinear_map.hpp"
#include "tpnf/nullfiliform.hpp"
#include "tpnf/tp_structures.hpp"

namespace tpnf::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Scalar rational(int span = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    Scalar s(num(engine_), den(engine_));
    s.canonicalize();
    return s;
  }

  Scalar nonzero_rational(int span = 9, int max_den = 5) {
    Scalar s;
    do {
      s = rational(span, max_den);
    } while (sgn(s) == 0);
    return s;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  Vector vector(int dim) {
    Vector v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = rational();
    return v;
  }

  AlphaParams alpha(int n) { return AlphaParams(n, vector(n - 1)); }

  /// Random alpha with a random number of leading zeros and sparse tail, so
  /// every first-nonzero index is exercised.
  AlphaParams structured_alpha(int n) {
    Vector v(static_cast<std::size_t>(n - 1));
    int lead = integer(0, n - 1);
    for (int t = 2; t <= n; ++t) {
      if (t - 2 < lead) continue;
      v[t - 2] = coin(0.7) ? rational() : Scalar(0);
    }
    return AlphaParams(n, std::move(v));
  }

  AutomorphismParams automorphism(int n) {
    Vector v = vector(n);
    v[0] = nonzero_rational();
    return AutomorphismParams(std::move(v));
  }

  BilinearMap bilinear(int dim, double density = 0.3) {
    BilinearMap b(dim);
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j)
        for (int k = 1; k <= dim; ++k)
          if (coin(density)) b.add(i, j, k, rational());
    return b;
  }

 private:
  std::mt19937_64 engine_;
};

/// Sum over every composition k_1 + ... + k_parts = total, enumerated one by
/// one.
inline Scalar brute_composition_sum(const Vector& a, int parts, int total) {
  Scalar sum = 0;
  std::vector<int> ks(static_cast<std::size_t>(parts), 1);
  auto visit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      if (remaining < 1 || remaining > static_cast<int>(a.size())) return;
      ks[pos] = remaining;
      Scalar prod = 1;
      for (int k : ks) prod *= a[k - 1];
      sum += prod;
      return;
    }
    for (int k = 1; k <= remaining - (parts - pos - 1) && k <= static_cast<int>(a.size()); ++k) {
      ks[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  visit(visit, 0, total);
  return sum;
}

/// The intermediate bracket reached before the Jacobi step, still carrying
/// alpha_1: [e_i, e_j] = (j - i) sum_{t=i+j-2}^{n} alpha_{t-i-j+3} e_t.
/// `alpha` holds alpha_1..alpha_n.
inline BilinearMap intermediate_bracket(const Vector& alpha) {
  const int n = static_cast<int>(alpha.size());
  BilinearMap br(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int t = std::max(1, i + j - 2); t <= n; ++t) {
        int idx = t - i - j + 3;
        if (idx < 1 || idx > n || sgn(alpha[idx - 1]) == 0) continue;
        br.add(i, j, t, Scalar(j - i) * alpha[idx - 1]);
      }
    }
  return br;
}

/// Dense random matrix with nonzero determinant.
inline Matrix random_invertible(Rng& rng, int n) {
  while (true) {
    Matrix m(n, n);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) m(r, c) = rng.rational(4, 3);
    if (m.inverse()) return m;
  }
}

}  // namespace tpnf::testing
