#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace voa {

// Runs fn(i) for i in [0, count) on up to `workers` threads. Tasks must
// write into independent slots; callers merge in index order, so results
// are scheduling-independent.
inline void parallel_for_index(size_t count, int workers,
                               const std::function<void(size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    int spawn = std::min<int>(workers, static_cast<int>(count));
    threads.reserve(static_cast<size_t>(spawn));
    for (int w = 0; w < spawn; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace voa
