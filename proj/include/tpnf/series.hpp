#pragma once

#include <optional>

#include "tpnf/bilinear_map.hpp"

namespace tpnf {

enum class SeriesKind {
  power,    ///< A^1 = A, A^{i+1} = sum_{k=1}^{i} A^k A^{i+1-k}
  derived,  ///< D^1 = A, D^{i+1} = span B(D^i, D^i)
};

/// dims[i] and bases[i] describe the (i+1)-th term of the series. The chain
/// ends at the first zero term or just before the first repeated term.
struct SubspaceChain {
  std::vector<int> dims;
  std::vector<std::vector<Vector>> bases;

  bool reaches_zero() const { return !dims.empty() && dims.back() == 0; }
};

SubspaceChain series(const BilinearMap& b, SeriesKind kind);

/// Smallest i with A^i = 0, or nullopt if the power series stalls above zero.
std::optional<int> nilindex(const BilinearMap& b);

/// dim A^i = (n + 1) - i for 1 <= i <= n + 1.
bool is_null_filiform(const BilinearMap& b);

}  // namespace tpnf
