#include "tpnf/identities.hpp"

#include <omp.h>

#include <atomic>
#include <functional>

#include "tpnf/errors.hpp"

namespace tpnf {

namespace {

using ResidualFn = std::function<Vector(int, int, int)>;

// Index of the first failing tuple in lexicographic order over `count`
// flattened tuples, or count if none fails.
std::size_t first_failure(std::size_t count, const std::function<bool(std::size_t)>& fails,
                          Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t t = 0; t < count; ++t) {
      if (fails(t)) return t;
    }
    return count;
  }
  std::atomic<std::size_t> best{count};
  const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long t = 0; t < total; ++t) {
    auto idx = static_cast<std::size_t>(t);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (fails(idx)) {
      std::size_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  return best.load();
}

void run_check(Identity id, int n, int arity, const ResidualFn& fn, Execution exec,
               std::optional<bool>& flag, std::vector<Witness>& witnesses) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const std::size_t count = arity == 2 ? dim * dim : dim * dim * dim;
  auto decode = [&](std::size_t t) {
    std::array<int, 3> tr{0, 0, 0};
    if (arity == 2) {
      tr[0] = static_cast<int>(t / dim) + 1;
      tr[1] = static_cast<int>(t % dim) + 1;
    } else {
      tr[0] = static_cast<int>(t / (dim * dim)) + 1;
      tr[1] = static_cast<int>((t / dim) % dim) + 1;
      tr[2] = static_cast<int>(t % dim) + 1;
    }
    return tr;
  };
  std::size_t bad = first_failure(
      count,
      [&](std::size_t t) {
        auto tr = decode(t);
        return !is_zero(fn(tr[0], tr[1], tr[2]));
      },
      exec);
  flag = bad == count;
  if (bad != count) {
    auto tr = decode(bad);
    witnesses.push_back(Witness{id, tr, fn(tr[0], tr[1], tr[2])});
  }
}

// B(u, e_j) for a dense u.
Vector apply_right(const BilinearMap& b, const Vector& u, int j) {
  return b.apply(u, basis_vector(b.dim(), j));
}

void require_same_dim(const AlgebraPair& pair) {
  if (pair.dot.dim() != pair.bracket.dim()) throw InputError("product and bracket dimensions differ");
}

}  // namespace

std::string to_string(Identity id) {
  switch (id) {
    case Identity::commutative: return "commutative";
    case Identity::associative: return "associative";
    case Identity::antisymmetric: return "antisymmetric";
    case Identity::jacobi: return "jacobi";
    case Identity::leibniz: return "leibniz";
    case Identity::transposed_leibniz: return "transposed_leibniz";
    case Identity::mixed_trivial: return "mixed_trivial";
  }
  return "unknown";
}

std::optional<bool> IdentityReport::flag(Identity id) const {
  switch (id) {
    case Identity::commutative: return commutative;
    case Identity::associative: return associative;
    case Identity::antisymmetric: return antisymmetric;
    case Identity::jacobi: return jacobi;
    case Identity::leibniz: return leibniz;
    case Identity::transposed_leibniz: return transposed_leibniz;
    case Identity::mixed_trivial: return mixed_trivial;
  }
  return std::nullopt;
}

const Witness* IdentityReport::witness(Identity id) const {
  for (const auto& w : witnesses) {
    if (w.identity == id) return &w;
  }
  return nullptr;
}

void IdentityReport::merge(const IdentityReport& other) {
  auto take = [](std::optional<bool>& mine, const std::optional<bool>& theirs) {
    if (theirs) mine = theirs;
  };
  take(commutative, other.commutative);
  take(associative, other.associative);
  take(antisymmetric, other.antisymmetric);
  take(jacobi, other.jacobi);
  take(leibniz, other.leibniz);
  take(transposed_leibniz, other.transposed_leibniz);
  take(mixed_trivial, other.mixed_trivial);
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

IdentityReport check_product(const BilinearMap& dot, Execution exec) {
  IdentityReport report;
  const int n = dot.dim();
  run_check(
      Identity::commutative, n, 2,
      [&](int i, int j, int) { return dot.apply_basis(i, j) - dot.apply_basis(j, i); }, exec,
      report.commutative, report.witnesses);
  run_check(
      Identity::associative, n, 3,
      [&](int i, int j, int k) {
        return apply_right(dot, dot.apply_basis(i, j), k) - dot.apply_left(i, dot.apply_basis(j, k));
      },
      exec, report.associative, report.witnesses);
  return report;
}

IdentityReport check_bracket(const BilinearMap& bracket, Execution exec) {
  IdentityReport report;
  const int n = bracket.dim();
  run_check(
      Identity::antisymmetric, n, 2,
      [&](int i, int j, int) { return bracket.apply_basis(i, j) + bracket.apply_basis(j, i); },
      exec, report.antisymmetric, report.witnesses);
  run_check(
      Identity::jacobi, n, 3,
      [&](int i, int j, int k) {
        return apply_right(bracket, bracket.apply_basis(i, j), k) +
               apply_right(bracket, bracket.apply_basis(j, k), i) +
               apply_right(bracket, bracket.apply_basis(k, i), j);
      },
      exec, report.jacobi, report.witnesses);
  return report;
}

IdentityReport check_compat(const AlgebraPair& pair, Execution exec) {
  require_same_dim(pair);
  IdentityReport report;
  const int n = pair.dot.dim();
  const BilinearMap& dot = pair.dot;
  const BilinearMap& br = pair.bracket;
  run_check(
      Identity::leibniz, n, 3,
      [&](int x, int y, int z) {
        return br.apply_left(x, dot.apply_basis(y, z)) - apply_right(dot, br.apply_basis(x, y), z) -
               dot.apply_left(y, br.apply_basis(x, z));
      },
      exec, report.leibniz, report.witnesses);
  run_check(
      Identity::transposed_leibniz, n, 3,
      [&](int x, int y, int z) {
        return Scalar(2) * dot.apply_left(z, br.apply_basis(x, y)) -
               apply_right(br, dot.apply_basis(z, x), y) - br.apply_left(x, dot.apply_basis(z, y));
      },
      exec, report.transposed_leibniz, report.witnesses);
  run_check(
      Identity::mixed_trivial, n, 3,
      [&](int x, int y, int z) {
        Vector first = dot.apply_left(x, br.apply_basis(y, z));
        if (!is_zero(first)) return first;
        return apply_right(br, dot.apply_basis(x, y), z);
      },
      exec, report.mixed_trivial, report.witnesses);
  return report;
}

IdentityReport check_all(const AlgebraPair& pair, Execution exec) {
  require_same_dim(pair);
  IdentityReport report = check_product(pair.dot, exec);
  report.merge(check_bracket(pair.bracket, exec));
  report.merge(check_compat(pair, exec));
  return report;
}

bool is_poisson(const IdentityReport& r) {
  return r.commutative.value_or(false) && r.associative.value_or(false) &&
         r.antisymmetric.value_or(false) && r.jacobi.value_or(false) && r.leibniz.value_or(false);
}

bool is_transposed_poisson(const IdentityReport& r) {
  return r.commutative.value_or(false) && r.associative.value_or(false) &&
         r.antisymmetric.value_or(false) && r.jacobi.value_or(false) &&
         r.transposed_leibniz.value_or(false);
}

bool is_poisson(const AlgebraPair& pair, Execution exec) { return is_poisson(check_all(pair, exec)); }

bool is_transposed_poisson(const AlgebraPair& pair, Execution exec) {
  return is_transposed_poisson(check_all(pair, exec));
}

Vector residual(Identity id, const AlgebraPair& pair, const Vector& x, const Vector& y,
                const Vector& z) {
  require_same_dim(pair);
  const BilinearMap& d = pair.dot;
  const BilinearMap& b = pair.bracket;
  switch (id) {
    case Identity::commutative: return d.apply(x, y) - d.apply(y, x);
    case Identity::associative: return d.apply(d.apply(x, y), z) - d.apply(x, d.apply(y, z));
    case Identity::antisymmetric: return b.apply(x, y) + b.apply(y, x);
    case Identity::jacobi:
      return b.apply(b.apply(x, y), z) + b.apply(b.apply(y, z), x) + b.apply(b.apply(z, x), y);
    case Identity::leibniz:
      return b.apply(x, d.apply(y, z)) - d.apply(b.apply(x, y), z) - d.apply(y, b.apply(x, z));
    case Identity::transposed_leibniz:
      return Scalar(2) * d.apply(z, b.apply(x, y)) - b.apply(d.apply(z, x), y) -
             b.apply(x, d.apply(z, y));
    case Identity::mixed_trivial: {
      Vector first = d.apply(x, b.apply(y, z));
      if (!is_zero(first)) return first;
      return b.apply(d.apply(x, y), z);
    }
  }
  throw InputError("unknown identity");
}

}  // namespace tpnf
