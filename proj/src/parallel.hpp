#ifndef NCGEO_PARALLEL_HPP
#define NCGEO_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace ncgeo {

// Worker count: hardware concurrency capped by NCGEO_THREADS.
inline int thread_budget() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("NCGEO_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

// Disjoint-write parallel loop over [0, n); deterministic because each index
// owns its output slot.
template <class F>
void parallel_for(long n, F&& f) {
    int workers = thread_budget();
    if (workers <= 1 || n < 2 * workers) {
        for (long i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (long i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace ncgeo

#endif
