#pragma once

namespace nestobetti {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical, deterministically ordered results.
enum class Execution { Serial, Parallel };

/// Caps the OpenMP worker pool; 0 leaves the runtime default.
void set_thread_count(int threads);
int thread_count();

}  // namespace nestobetti
