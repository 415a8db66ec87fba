#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace fraclab {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Each index writes its
// own result slot and every reduction stays inside fn, so the output is
// byte-identical for any worker count.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace fraclab
