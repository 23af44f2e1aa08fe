#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace springer {

inline int default_parallelism() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(index) for every index in [0, count) across `jobs` threads.
/// Callers keep determinism by writing results into index-addressed slots.
/// The first exception thrown by any worker is rethrown after all join.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int spawn = jobs < count ? jobs : count;
    threads.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

} // namespace springer
