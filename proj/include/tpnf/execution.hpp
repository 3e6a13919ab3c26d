#pragma once

namespace tpnf {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

}  // namespace tpnf
