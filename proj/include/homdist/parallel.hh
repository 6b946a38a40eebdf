#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace homdist
{
    /// Worker count: `requested` if positive, else HOMDIST_THREADS, else the
    /// hardware concurrency (at least 1).
    [[nodiscard]] auto resolve_threads(int requested) -> int;

    /// Calls fn(i) for i in [0, count) on up to `threads` workers. Each index
    /// is processed exactly once; results must be written to per-index slots.
    /// The first exception thrown by any call is rethrown after all workers join.
    template <typename Fn>
    auto parallel_for(std::size_t count, int threads, Fn && fn) -> void
    {
        auto workers = static_cast<std::size_t>(std::max(1, threads));
        workers = std::min(workers, count);
        if (workers <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    auto i = next.fetch_add(1);
                    if (i >= count)
                        return;
                    try {
                        fn(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                        next = count;
                        return;
                    }
                }
            });
        for (auto & t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}
