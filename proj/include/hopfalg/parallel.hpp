#ifndef HOPFALG_PARALLEL_HPP
#define HOPFALG_PARALLEL_HPP

#include <algorithm>
#include <thread>
#include <vector>

namespace hopfalg {

/// Global worker count for the big axiom scans.  Results are pure
/// reductions, so they do not depend on this value.
inline int& thread_count() {
    static int n = 1;
    return n;
}

/// Runs fn(lo, hi, tid) over a partition of [0, n) into contiguous blocks.
template <class F>
void parallel_blocks(size_t n, F&& fn) {
    int t = std::max(1, thread_count());
    if (t == 1 || n < 64) {
        fn(size_t(0), n, 0);
        return;
    }
    size_t chunk = (n + t - 1) / t;
    std::vector<std::thread> workers;
    for (int i = 0; i < t; ++i) {
        size_t lo = std::min(n, i * chunk), hi = std::min(n, (i + 1) * chunk);
        if (lo >= hi) break;
        workers.emplace_back([&fn, lo, hi, i] { fn(lo, hi, i); });
    }
    for (auto& w : workers) w.join();
}

} // namespace hopfalg

#endif
