#pragma once

#include <cstdint>

namespace gspin {

/// Run f(i) for i in [0, n). The flag only toggles OpenMP scheduling; callers
/// must keep f free of cross-iteration effects so both paths agree exactly.
template <class F>
void parallel_for(std::uint64_t n, bool parallel, F&& f) {
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::uint64_t i = 0; i < n; ++i) f(i);
    } else {
        for (std::uint64_t i = 0; i < n; ++i) f(i);
    }
}

} // namespace gspin
