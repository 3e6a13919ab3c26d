#include "tpnf/series.hpp"

#include "tpnf/linalg.hpp"

namespace tpnf {

namespace {

void add_products(const BilinearMap& b, const std::vector<Vector>& left,
                  const std::vector<Vector>& right, std::vector<Vector>& out) {
  for (const auto& x : left) {
    for (const auto& y : right) {
      Vector v = b.apply(x, y);
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  }
}

}  // namespace

SubspaceChain series(const BilinearMap& b, SeriesKind kind) {
  const int n = b.dim();
  std::vector<Vector> whole;
  for (int i = 1; i <= n; ++i) whole.push_back(basis_vector(n, i));

  SubspaceChain chain;
  chain.dims.push_back(n);
  chain.bases.push_back(whole);

  while (chain.dims.back() != 0) {
    const std::size_t i = chain.bases.size();  // next term has index i + 1
    std::vector<Vector> generators;
    if (kind == SeriesKind::power) {
      for (std::size_t k = 1; k <= i; ++k) {
        add_products(b, chain.bases[k - 1], chain.bases[i - k], generators);
      }
    } else {
      add_products(b, chain.bases.back(), chain.bases.back(), generators);
    }
    std::vector<Vector> next = span_basis(generators);
    const int d = static_cast<int>(next.size());
    if (d == chain.dims.back()) break;
    chain.dims.push_back(d);
    chain.bases.push_back(std::move(next));
  }
  return chain;
}

std::optional<int> nilindex(const BilinearMap& b) {
  SubspaceChain chain = series(b, SeriesKind::power);
  if (!chain.reaches_zero()) return std::nullopt;
  return static_cast<int>(chain.dims.size());
}

bool is_null_filiform(const BilinearMap& b) {
  const int n = b.dim();
  SubspaceChain chain = series(b, SeriesKind::power);
  if (static_cast<int>(chain.dims.size()) != n + 1) return false;
  for (int i = 1; i <= n + 1; ++i) {
    if (chain.dims[i - 1] != n + 1 - i) return false;
  }
  return true;
}

}  // namespace tpnf
