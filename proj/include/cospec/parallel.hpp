#pragma once

namespace cospec::par {

// Upper bound on worker threads for all parallel kernels. Resolved once
// from COSPEC_THREADS (default: all cores).
int thread_limit();

// Runtime override of the cap; values are clamped to [1, hardware limit].
void set_thread_limit(int n);

} // namespace cospec::par
