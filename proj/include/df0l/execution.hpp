#pragma once

namespace df0l {

/// Selects the serial reference kernels or their OpenMP counterparts. Both
/// produce identical results.
enum class Execution { serial, parallel };

}  // namespace df0l
