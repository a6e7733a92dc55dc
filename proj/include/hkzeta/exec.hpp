#pragma once

namespace hkzeta {

/// Selects the serial reference loop or the OpenMP loop for the kernels that
/// have both. Results are identical either way; the serial path is the one
/// the tests treat as ground truth.
enum class Exec { serial, parallel };

}  // namespace hkzeta
