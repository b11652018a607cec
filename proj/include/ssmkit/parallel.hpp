#pragma once

#include <cstdint>

namespace ssmkit {

// Global worker count for the OpenMP kernels. 0 = runtime default.
void set_threads(int n);
int threads();

namespace detail {
int resolve_threads();
}

// Data-parallel loop over [0, n). The body must write only to slots owned by
// its own index; reductions are done serially by the caller afterwards, so
// results are identical for every thread count.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
#if defined(_OPENMP)
    const int nt = detail::resolve_threads();
    if (nt > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(nt)
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    for (std::int64_t i = 0; i < n; ++i) fn(i);
}

} // namespace ssmkit
