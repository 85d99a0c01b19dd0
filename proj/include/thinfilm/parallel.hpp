#ifndef THINFILM_PARALLEL_HPP
#define THINFILM_PARALLEL_HPP

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thinfilm {

/** Thread cap for parallel kernels: THINFILM_THREADS if set, otherwise all
    available hardware threads. */
inline int thread_cap() {
    if (const char* env = std::getenv("THINFILM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/** Apply the THINFILM_THREADS cap to the OpenMP runtime. Called once by the
    CLI; library kernels pass thread_cap() to num_threads clauses directly. */
inline void apply_thread_cap() {
#ifdef _OPENMP
    omp_set_num_threads(thread_cap());
#endif
}

} // namespace thinfilm

#endif
