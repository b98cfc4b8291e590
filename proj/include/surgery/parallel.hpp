#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace surgery {

// Worker count for sweeps: SURGERY_OBSTRUCTION_THREADS if set and positive,
// hardware concurrency otherwise, always at least 1.
inline unsigned max_threads() {
    if (const char* env = std::getenv("SURGERY_OBSTRUCTION_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs body(i) for every i in [begin, end), split into contiguous blocks
// across threads.  Bodies must be independent; callers aggregate results
// deterministically afterwards (e.g. per-index arrays, min-reductions).
template <typename Body>
void parallel_for(long long begin, long long end, Body&& body) {
    const long long n = end - begin;
    if (n <= 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<long long>(n, static_cast<long long>(max_threads())));
    if (workers <= 1) {
        for (long long i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const long long lo = begin + n * w / workers;
        const long long hi = begin + n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &body] {
            for (long long i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace surgery
