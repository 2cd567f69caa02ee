#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spheres::detail {

// Worker count: SPHERES_THREADS when set (minimum 1), otherwise the hardware
// concurrency. Results are written by index, so the outcome is identical at
// any thread count.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("SPHERES_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned cap = thread_cap();
    if (cap <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cap, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace spheres::detail
