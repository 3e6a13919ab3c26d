#include "tpnf/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tpnf/errors.hpp"

namespace tpnf {

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_int_row(const SparseRow& row, int unknowns) {
  std::map<int, Scalar> merged;
  for (const auto& [col, v] : row) {
    if (col < 0 || col >= unknowns) throw InputError("unknown index out of range");
    merged[col] += v;
  }
  mpz_class lcm = 1;
  for (const auto& [col, v] : merged) {
    if (sgn(v) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow out;
  for (const auto& [col, v] : merged) {
    if (sgn(v) == 0) continue;
    mpz_class scaled = v.get_num() * (lcm / v.get_den());
    out.emplace_back(col, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

const mpz_class* entry(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& term, int c) { return term.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// a * row - b * pivot
IntRow combine(const mpz_class& a, const IntRow& row, const mpz_class& b, const IntRow& pivot) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto x = row.begin();
  auto y = pivot.begin();
  while (x != row.end() || y != pivot.end()) {
    mpz_class v;
    int col;
    if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
      col = x->first;
      v = a * x->second;
      ++x;
    } else if (x == row.end() || y->first < x->first) {
      col = y->first;
      v = -b * y->second;
      ++y;
    } else {
      col = x->first;
      v = a * x->second - b * y->second;
      ++x;
      ++y;
    }
    if (sgn(v) != 0) out.emplace_back(col, std::move(v));
  }
  make_primitive(out);
  return out;
}

void eliminate(IntRow& row, int col, const IntRow& pivot, const mpz_class& pivot_value) {
  const mpz_class* v = entry(row, col);
  if (v == nullptr) return;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pivot_value.get_mpz_t(), v->get_mpz_t());
  mpz_class a = pivot_value / g;
  mpz_class b = *v / g;
  row = combine(a, row, b, pivot);
}

}  // namespace

EchelonForm row_reduce(const LinearSystem& system) {
  std::set<IntRow> unique;
  for (const auto& row : system.rows) {
    IntRow r = to_int_row(row, system.unknowns);
    if (!r.empty()) unique.insert(std::move(r));
  }
  std::vector<IntRow> active(unique.begin(), unique.end());

  EchelonForm form;
  form.unknowns = system.unknowns;
  for (int col = 0; col < system.unknowns && !active.empty(); ++col) {
    std::size_t best = active.size();
    mpz_class best_abs = 0;
    for (std::size_t r = 0; r < active.size(); ++r) {
      const mpz_class* v = entry(active[r], col);
      if (v == nullptr) continue;
      mpz_class a = abs(*v);
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    if (best == active.size()) continue;

    IntRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    mpz_class pivot_value = *entry(pivot, col);

    std::vector<IntRow> next;
    next.reserve(active.size());
    for (auto& row : active) {
      eliminate(row, col, pivot, pivot_value);
      if (!row.empty()) next.push_back(std::move(row));
    }
    active = std::move(next);
    for (auto& row : form.rows) eliminate(row, col, pivot, pivot_value);

    form.rows.push_back(std::move(pivot));
    form.pivot_columns.push_back(col);
  }
  return form;
}

std::vector<Vector> nullspace(const LinearSystem& system) {
  EchelonForm form = row_reduce(system);
  std::vector<bool> is_pivot(static_cast<std::size_t>(system.unknowns), false);
  for (int c : form.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (int free = 0; free < system.unknowns; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(system.unknowns);
    v[free] = 1;
    for (std::size_t r = 0; r < form.rows.size(); ++r) {
      const mpz_class* f = entry(form.rows[r], free);
      if (f == nullptr) continue;
      int pc = form.pivot_columns[r];
      Scalar value(-*f, *entry(form.rows[r], pc));
      value.canonicalize();
      v[pc] = value;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSystem to_system(const std::vector<Vector>& rows, int unknowns) {
  LinearSystem system;
  system.unknowns = unknowns;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != unknowns) throw InputError("row length mismatch");
    SparseRow sparse;
    for (int c = 0; c < unknowns; ++c) {
      if (sgn(row[c]) != 0) sparse.emplace_back(c, row[c]);
    }
    system.rows.push_back(std::move(sparse));
  }
  return system;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  const int dim = static_cast<int>(vectors.front().size());
  EchelonForm form = row_reduce(to_system(vectors, dim));
  std::vector<std::size_t> order(form.rows.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return form.pivot_columns[a] < form.pivot_columns[b];
  });
  std::vector<Vector> basis;
  for (std::size_t r : order) {
    Vector v = zero_vector(dim);
    const mpz_class& p = *entry(form.rows[r], form.pivot_columns[r]);
    for (const auto& [col, value] : form.rows[r]) {
      v[col] = Scalar(value, p);
      v[col].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return row_reduce(to_system(vectors, static_cast<int>(vectors.front().size()))).rank();
}

bool in_span(const std::vector<Vector>& vectors, const Vector& v) {
  std::vector<Vector> extended = vectors;
  int before = rank(vectors);
  extended.push_back(v);
  return rank(extended) == before;
}

}  // namespace tpnf
