#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace zf {

/// Clamps a requested worker count; <= 0 asks for the hardware default.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, count) striped across the workers. Results must
/// be written to per-index slots so the merge is order-independent.
inline void parallel_for_index(uint64_t count, int workers,
                               const std::function<void(uint64_t)>& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || count <= 1) {
        for (uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (uint64_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace zf
