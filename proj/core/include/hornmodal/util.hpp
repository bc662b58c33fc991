#ifndef HORNMODAL_UTIL_HPP
#define HORNMODAL_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hornmodal {

inline unsigned worker_count(int requested = 0) {
    if (requested > 0) return static_cast<unsigned>(requested);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min(hw, 8u);
}

// Splits [0, total) into contiguous chunks and runs fn(chunk_begin, chunk_end)
// on each from a worker thread. fn must not touch shared mutable state other
// than its own slot.
inline void parallel_chunks(std::uint64_t total, unsigned workers,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    if (workers <= 1 || total < 2048) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::uint64_t lo = t * chunk;
        if (lo >= total) break;
        std::uint64_t hi = std::min(total, lo + chunk);
        threads.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
    }
    for (auto& th : threads) th.join();
}

} // namespace hornmodal

#endif // HORNMODAL_UTIL_HPP
