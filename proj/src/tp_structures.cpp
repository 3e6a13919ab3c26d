#include "tpnf/tp_structures.hpp"

#include <omp.h>

#include <array>
#include <set>
#include <string>

#include "tpnf/errors.hpp"
#include "tpnf/nullfiliform.hpp"

namespace tpnf {

AlphaParams::AlphaParams(int n, Vector values, std::optional<Scalar> alpha1)
    : n_(n), values_(std::move(values)), alpha1_(std::move(alpha1)) {
  if (n < 2 || n > kMaxDim) throw InputError("TP family needs 2 <= n <= " + std::to_string(kMaxDim));
  if (static_cast<int>(values_.size()) != n - 1) {
    throw InputError("expected " + std::to_string(n - 1) + " alpha values (alpha_2..alpha_" +
                     std::to_string(n) + "), got " + std::to_string(values_.size()));
  }
}

AlphaParams AlphaParams::zero(int n) { return AlphaParams(n, zero_vector(n - 1)); }

AlphaParams AlphaParams::indicator(int n, int t) {
  if (t < 2 || t > n) throw InputError("indicator index outside 2..n");
  Vector v = zero_vector(n - 1);
  v[t - 2] = 1;
  return AlphaParams(n, std::move(v));
}

const Scalar& AlphaParams::operator[](int t) const {
  if (t < 2 || t > n_) throw InputError("alpha index " + std::to_string(t) + " outside 2..n");
  return values_[t - 2];
}

bool AlphaParams::is_zero() const { return tpnf::is_zero(values_) && !has_nonzero_alpha1(); }

bool operator==(const AlphaParams& a, const AlphaParams& b) {
  return a.n_ == b.n_ && a.values_ == b.values_ &&
         a.alpha1_.value_or(Scalar(0)) == b.alpha1_.value_or(Scalar(0));
}

BilinearMap build_tp_bracket(const AlphaParams& params) {
  if (params.has_nonzero_alpha1()) throw InputError("TP brackets require alpha_1 = 0");
  const int n = params.n();
  BilinearMap br(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || i + j < 3 || i + j > n + 1) continue;
      for (int t = i + j - 1; t <= n; ++t) {
        const Scalar& a = params[t - i - j + 3];
        if (sgn(a) != 0) br.add(i, j, t, Scalar(j - i) * a);
      }
    }
  }
  return br;
}

AlphaParams extract_alphas(const BilinearMap& bracket) {
  const int n = bracket.dim();
  if (n < 2) throw InputError("TP family needs n >= 2");
  Vector values = zero_vector(n - 1);
  for (int t = 2; t <= n; ++t) values[t - 2] = bracket.coeff(1, 2, t);
  AlphaParams params(n, std::move(values), bracket.coeff(1, 2, 1));

  AlphaParams family_member(n, params.values());
  BilinearMap expected = build_tp_bracket(family_member);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        Scalar want = expected.coeff(i, j, k);
        Scalar got = bracket.coeff(i, j, k);
        if (want != got) throw NotInFamilyError(i, j, k, to_string(want), to_string(got));
      }
    }
  }
  return params;
}

namespace {

// Symbolic vector: component m is a linear form over the bracket unknowns.
using SymVec = std::vector<SparseRow>;

int pair_index(int n, int i, int j) {
  // Pairs (i, j), i < j, in lexicographic order.
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

int unknown_count(int n) { return n * (n - 1) / 2 * n; }

SymVec sym_bracket(int n, int i, int j) {
  SymVec v(static_cast<std::size_t>(n));
  if (i == j) return v;
  int sign = i < j ? 1 : -1;
  int p = i < j ? pair_index(n, i, j) : pair_index(n, j, i);
  for (int k = 1; k <= n; ++k) v[k - 1].emplace_back(p * n + (k - 1), Scalar(sign));
  return v;
}

void accumulate(SparseRow& into, const SparseRow& form, const Scalar& w) {
  for (const auto& [u, c] : form) into.emplace_back(u, w * c);
}

// sum_a u_a [e_a, e_b]
SymVec sym_bracket_vec_left(int n, const Vector& u, int b) {
  SymVec out(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    if (sgn(u[a - 1]) == 0) continue;
    SymVec br = sym_bracket(n, a, b);
    for (int m = 0; m < n; ++m) accumulate(out[m], br[m], u[a - 1]);
  }
  return out;
}

// sum_b u_b [e_a, e_b]
SymVec sym_bracket_vec_right(int n, int a, const Vector& u) {
  SymVec out(static_cast<std::size_t>(n));
  for (int b = 1; b <= n; ++b) {
    if (sgn(u[b - 1]) == 0) continue;
    SymVec br = sym_bracket(n, a, b);
    for (int m = 0; m < n; ++m) accumulate(out[m], br[m], u[b - 1]);
  }
  return out;
}

// e_c . V
SymVec sym_dot_left(const BilinearMap& dot, int c, const SymVec& v) {
  const int n = dot.dim();
  SymVec out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    if (v[k - 1].empty()) continue;
    for (const auto& t : dot.product(c, k)) accumulate(out[t.k - 1], v[k - 1], t.c);
  }
  return out;
}

// V . e_c
SymVec sym_dot_right(const BilinearMap& dot, const SymVec& v, int c) {
  const int n = dot.dim();
  SymVec out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    if (v[k - 1].empty()) continue;
    for (const auto& t : dot.product(k, c)) accumulate(out[t.k - 1], v[k - 1], t.c);
  }
  return out;
}

void add_into(SymVec& acc, const SymVec& v, const Scalar& w) {
  for (std::size_t m = 0; m < acc.size(); ++m) accumulate(acc[m], v[m], w);
}

std::vector<SparseRow> triple_rows(const BilinearMap& dot, BracketMode mode, int x, int y, int z) {
  const int n = dot.dim();
  SymVec acc(static_cast<std::size_t>(n));
  if (mode == BracketMode::transposed) {
    // 2 z.[x, y] - [z.x, y] - [x, z.y]
    add_into(acc, sym_dot_left(dot, z, sym_bracket(n, x, y)), 2);
    add_into(acc, sym_bracket_vec_left(n, dot.apply_basis(z, x), y), -1);
    add_into(acc, sym_bracket_vec_right(n, x, dot.apply_basis(z, y)), -1);
  } else {
    // [x, y.z] - [x, y].z - y.[x, z]
    add_into(acc, sym_bracket_vec_right(n, x, dot.apply_basis(y, z)), 1);
    add_into(acc, sym_dot_right(dot, sym_bracket(n, x, y), z), -1);
    add_into(acc, sym_dot_left(dot, y, sym_bracket(n, x, z)), -1);
  }
  std::vector<SparseRow> rows;
  for (auto& r : acc) {
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

// Vector J(p, q)(a, b, c) = [[a,b]_p, c]_q + [[b,c]_p, a]_q + [[c,a]_p, b]_q
Vector mixed_jacobi(const BilinearMap& p, const BilinearMap& q, int a, int b, int c) {
  const int n = p.dim();
  return q.apply(p.apply_basis(a, b), basis_vector(n, c)) +
         q.apply(p.apply_basis(b, c), basis_vector(n, a)) +
         q.apply(p.apply_basis(c, a), basis_vector(n, b));
}

}  // namespace

LinearSystem assemble_bracket_system(const BilinearMap& dot, BracketMode mode, Execution exec) {
  const int n = dot.dim();
  const long long triples = static_cast<long long>(n) * n * n;
  std::vector<std::vector<SparseRow>> per_triple(static_cast<std::size_t>(triples));
  auto work = [&](long long t) {
    int x = static_cast<int>(t / (n * n)) + 1;
    int y = static_cast<int>((t / n) % n) + 1;
    int z = static_cast<int>(t % n) + 1;
    per_triple[static_cast<std::size_t>(t)] = triple_rows(dot, mode, x, y, z);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long t = 0; t < triples; ++t) work(t);
  } else {
    for (long long t = 0; t < triples; ++t) work(t);
  }
  LinearSystem system;
  system.unknowns = unknown_count(n);
  for (auto& rows : per_triple) {
    for (auto& r : rows) system.rows.push_back(std::move(r));
  }
  return system;
}

BilinearMap bracket_from_unknowns(int n, const Vector& unknowns) {
  if (static_cast<int>(unknowns.size()) != unknown_count(n)) throw InputError("unknown vector size mismatch");
  BilinearMap br(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int p = pair_index(n, i, j);
      for (int k = 1; k <= n; ++k) {
        const Scalar& v = unknowns[static_cast<std::size_t>(p * n + k - 1)];
        if (sgn(v) == 0) continue;
        br.add(i, j, k, v);
        br.add(j, i, k, -v);
      }
    }
  }
  return br;
}

std::vector<Polynomial> jacobi_constraints(const std::vector<BilinearMap>& basis, Execution exec) {
  if (basis.empty()) return {};
  const int n = basis.front().dim();
  const int d = static_cast<int>(basis.size());
  std::vector<std::array<int, 3>> triples;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
    }
  }
  // Alternating in (a, b, c) for antisymmetric brackets, so a < b < c suffices.
  std::vector<std::vector<Polynomial>> per_triple(triples.size());
  auto work = [&](std::size_t t) {
    auto [a, b, c] = triples[t];
    std::vector<Polynomial> comps(static_cast<std::size_t>(n));
    for (int p = 1; p <= d; ++p) {
      for (int q = p; q <= d; ++q) {
        Vector v = mixed_jacobi(basis[p - 1], basis[q - 1], a, b, c);
        if (p != q) v = v + mixed_jacobi(basis[q - 1], basis[p - 1], a, b, c);
        for (int m = 1; m <= n; ++m) {
          if (sgn(v[m - 1]) != 0) comps[m - 1].add_term({p, q}, v[m - 1]);
        }
      }
    }
    per_triple[t] = std::move(comps);
  };
  const auto count = static_cast<long long>(triples.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long t = 0; t < count; ++t) work(static_cast<std::size_t>(t));
  } else {
    for (long long t = 0; t < count; ++t) work(static_cast<std::size_t>(t));
  }
  std::set<Polynomial> unique;
  for (const auto& comps : per_triple) {
    for (const auto& poly : comps) {
      if (!poly.is_zero()) unique.insert(poly.monic());
    }
  }
  return {unique.begin(), unique.end()};
}

SolutionSpace solve_bracket_space(const BilinearMap& dot, BracketMode mode, Execution exec) {
  const int n = dot.dim();
  if (n < 2 || n > kMaxSolveDim) {
    throw InputError("solve requires 2 <= n <= " + std::to_string(kMaxSolveDim));
  }
  LinearSystem system = assemble_bracket_system(dot, mode, exec);
  SolutionSpace space;
  space.n = n;
  space.mode = mode;
  for (const auto& v : nullspace(system)) space.basis.push_back(bracket_from_unknowns(n, v));
  space.residual_constraints = jacobi_constraints(space.basis, exec);
  return space;
}

SolutionSpace solve_bracket_space(int n, BracketMode mode, Execution exec) {
  if (n < 2 || n > kMaxSolveDim) {
    throw InputError("solve requires 2 <= n <= " + std::to_string(kMaxSolveDim));
  }
  return solve_bracket_space(build_mu0(n), mode, exec);
}

std::optional<std::vector<BilinearMap>> jacobi_locus(const SolutionSpace& space) {
  const int d = space.dimension();
  // Current subspace: coordinates c = basis_cols * u.
  std::vector<Vector> cols;
  for (int m = 1; m <= d; ++m) cols.push_back(basis_vector(d, m));

  while (true) {
    const int r = static_cast<int>(cols.size());
    std::vector<Polynomial> images;
    for (int m = 1; m <= d; ++m) {
      Polynomial img;
      for (int u = 1; u <= r; ++u) {
        if (sgn(cols[u - 1][m - 1]) != 0) img = img + cols[u - 1][m - 1] * Polynomial::variable(u);
      }
      images.push_back(std::move(img));
    }
    std::vector<Polynomial> restricted;
    for (const auto& q : space.residual_constraints) {
      Polynomial s = q.substitute(images);
      if (!s.is_zero()) restricted.push_back(std::move(s));
    }
    if (restricted.empty()) break;

    std::optional<Vector> forced;
    for (const auto& q : restricted) {
      Matrix form = q.quadratic_form(r);
      std::vector<Vector> rows;
      for (int i = 1; i <= r; ++i) {
        Vector row = zero_vector(r);
        for (int j = 1; j <= r; ++j) row[j - 1] = form(i, j);
        rows.push_back(std::move(row));
      }
      if (rank(rows) != 1) continue;
      for (const auto& row : rows) {
        if (!is_zero(row)) {
          forced = row;
          break;
        }
      }
      break;
    }
    if (!forced) return std::nullopt;

    // Kernel of the forced linear form, pulled back to c coordinates.
    std::vector<Vector> kernel = nullspace(to_system({*forced}, r));
    std::vector<Vector> next;
    for (const auto& k : kernel) {
      Vector c = zero_vector(d);
      for (int u = 1; u <= r; ++u) {
        if (sgn(k[u - 1]) != 0) c = c + k[u - 1] * cols[u - 1];
      }
      next.push_back(std::move(c));
    }
    cols = std::move(next);
    if (cols.empty()) break;
  }

  std::vector<BilinearMap> out;
  for (const auto& c : cols) out.push_back(linear_combination(space.basis, c));
  return out;
}

}  // namespace tpnf
