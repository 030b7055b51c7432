#pragma once

namespace krull {

/// Selects between the OpenMP kernel and the serial reference loop of an
/// exhaustive check. Both paths must produce identical results.
enum class Execution { serial, parallel };

}  // namespace krull
