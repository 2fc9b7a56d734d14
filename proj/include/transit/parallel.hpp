#pragma once

#include <cstdint>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace transit {

/// Worker count for corpus sweeps: TRANSIT_WORKERS if set, else hardware
/// concurrency. Parallelism only partitions index ranges; results are merged
/// in range order, so it never changes any output.
inline int worker_count() {
    if (const char* env = std::getenv("TRANSIT_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Splits [0, count) into contiguous chunks, maps each with `work` (which
/// receives [lo, hi)), and folds the chunk results left-to-right with
/// `merge`. Deterministic for pure `work` regardless of the worker count.
template <typename Result, typename Work, typename Merge>
Result parallel_map_merge(std::uint64_t count, Work&& work, Merge&& merge,
                          Result initial = Result{}) {
    const int workers = worker_count();
    if (workers <= 1 || count < 2) {
        Result r = std::move(initial);
        if (count > 0) merge(r, work(std::uint64_t{0}, count));
        return r;
    }
    const std::uint64_t chunks = std::min<std::uint64_t>(count, static_cast<std::uint64_t>(workers) * 8);
    const std::uint64_t step = (count + chunks - 1) / chunks;
    std::vector<std::future<Result>> futures;
    for (std::uint64_t lo = 0; lo < count; lo += step) {
        const std::uint64_t hi = std::min(count, lo + step);
        futures.push_back(std::async(std::launch::async, [&work, lo, hi] { return work(lo, hi); }));
    }
    Result r = std::move(initial);
    for (auto& f : futures) merge(r, f.get());
    return r;
}

}  // namespace transit
