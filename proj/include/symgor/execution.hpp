#pragma once

namespace symgor {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// produce identical results; the serial one exists for cross-checking.
enum class Execution { Serial, Parallel };

/// Bounds OpenMP parallelism; values < 1 restore the runtime default.
void set_worker_count(int workers);
int worker_count();

}  // namespace symgor
