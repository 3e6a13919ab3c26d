#include "tpnf/bilinear_map.hpp"

#include <algorithm>
#include <string>

#include "tpnf/errors.hpp"

namespace tpnf {

BilinearMap::BilinearMap(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw InputError("dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kMaxDim));
  }
  table_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
}

void BilinearMap::check_index(int idx) const {
  if (idx < 1 || idx > dim_) {
    throw InputError("index " + std::to_string(idx) + " outside 1.." + std::to_string(dim_));
  }
}

Scalar BilinearMap::coeff(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  for (const auto& t : product(i, j)) {
    if (t.k == k) return t.c;
  }
  return 0;
}

void BilinearMap::add(int i, int j, int k, const Scalar& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  auto& terms = table_[slot(i, j)];
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const Term& t, int key) { return t.k < key; });
  if (it != terms.end() && it->k == k) {
    it->c += c;
    if (sgn(it->c) == 0) terms.erase(it);
  } else if (sgn(c) != 0) {
    terms.insert(it, Term{k, c});
  }
}

std::vector<Entry> BilinearMap::entries() const {
  std::vector<Entry> out;
  for (int i = 1; i <= dim_; ++i) {
    for (int j = 1; j <= dim_; ++j) {
      for (const auto& t : product(i, j)) out.push_back(Entry{i, j, t.k, t.c});
    }
  }
  return out;
}

bool BilinearMap::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& t) { return t.empty(); });
}

Vector BilinearMap::apply(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw InputError("vector length does not match dimension " + std::to_string(dim_));
  }
  Vector out = zero_vector(dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (sgn(x[i - 1]) == 0) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (sgn(y[j - 1]) == 0) continue;
      const auto& terms = product(i, j);
      if (terms.empty()) continue;
      Scalar w = x[i - 1] * y[j - 1];
      for (const auto& t : terms) out[t.k - 1] += w * t.c;
    }
  }
  return out;
}

Vector BilinearMap::apply_left(int i, const Vector& y) const {
  check_index(i);
  if (static_cast<int>(y.size()) != dim_) throw InputError("vector length mismatch");
  Vector out = zero_vector(dim_);
  for (int j = 1; j <= dim_; ++j) {
    if (sgn(y[j - 1]) == 0) continue;
    for (const auto& t : product(i, j)) out[t.k - 1] += y[j - 1] * t.c;
  }
  return out;
}

Vector BilinearMap::apply_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  Vector out = zero_vector(dim_);
  for (const auto& t : product(i, j)) out[t.k - 1] = t.c;
  return out;
}

BilinearMap make_bilinear_map(int dim, std::span<const Entry> entries) {
  BilinearMap b(dim);
  for (const auto& e : entries) b.add(e.i, e.j, e.k, e.c);
  return b;
}

BilinearMap change_of_basis(const BilinearMap& b, const Matrix& p) {
  const int n = b.dim();
  if (p.rows() != n || p.cols() != n) throw InputError("basis change matrix has wrong size");
  auto inv = p.inverse();
  if (!inv) throw InputError("basis change matrix is singular");
  std::vector<Vector> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(p.column(i));

  BilinearMap out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Vector v = *inv * b.apply(images[i - 1], images[j - 1]);
      for (int k = 1; k <= n; ++k) {
        if (sgn(v[k - 1]) != 0) out.add(i, j, k, v[k - 1]);
      }
    }
  }
  return out;
}

BilinearMap linear_combination(std::span<const BilinearMap> maps, const Vector& coeffs) {
  if (maps.empty()) throw InputError("empty linear combination");
  if (maps.size() != coeffs.size()) throw InputError("coefficient count mismatch");
  BilinearMap out(maps.front().dim());
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (maps[m].dim() != out.dim()) throw InputError("dimension mismatch");
    if (sgn(coeffs[m]) == 0) continue;
    for (const auto& e : maps[m].entries()) out.add(e.i, e.j, e.k, coeffs[m] * e.c);
  }
  return out;
}

}  // namespace tpnf
