#pragma once

namespace vanprop {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// implementation; `parallel` uses OpenMP and must produce identical results.
enum class Exec { serial, parallel };

}  // namespace vanprop
