#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace plurigreen {

// Worker cap: PLURIGREEN_THREADS, default all cores.
inline int worker_count() {
    if (const char* env = std::getenv("PLURIGREEN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {
inline thread_local bool inside_parallel = false;
}

// Index-based parallel for with deterministic result placement: body(i) runs
// exactly once per i; callers write into pre-sized slots so aggregation is
// schedule-independent.  Nested calls run serially on the calling worker.
inline void parallel_for(int count, const std::function<void(int)>& body) {
    const int workers = std::min(worker_count(), count);
    if (workers <= 1 || detail::inside_parallel) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            detail::inside_parallel = true;
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed) std::rethrow_exception(error);
}

}  // namespace plurigreen
