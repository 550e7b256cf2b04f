#include "cospec/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cospec::par {

namespace {

int hardware_limit()
{
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return 1;
#endif
}

int initial_limit()
{
    if (const char* env = std::getenv("COSPEC_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return std::min(v, hardware_limit());
        } catch (...) {
            // unparsable value falls back to the default
        }
    }
    return hardware_limit();
}

std::atomic<int>& limit_slot()
{
    static std::atomic<int> limit{initial_limit()};
    return limit;
}

} // namespace

int thread_limit() { return limit_slot().load(); }

void set_thread_limit(int n)
{
    limit_slot().store(std::clamp(n, 1, hardware_limit()));
}

} // namespace cospec::par
