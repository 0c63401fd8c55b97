// Minimal parallel-for over an index range with a fixed worker count.

#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace trinv {

/// Run fn(i) for i in [0, n) on up to jobs threads (jobs <= 1 runs inline).
/// fn must be safe to call concurrently for distinct i.
inline void parallel_for(int jobs, int n, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    int nt = std::min(jobs, n);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace trinv
