#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dirac {

// 0 means: DIRAC_SCREEN_THREADS if set, otherwise hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Calls f(i) for i in [0, n) on up to `threads` workers.  Work is handed out
// in blocks; callers write into preallocated slots so output order does not
// depend on scheduling.  The first exception thrown by a worker is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t block = 64;
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        try {
            for (;;) {
                std::size_t lo = next.fetch_add(block);
                if (lo >= n) break;
                std::size_t hi = lo + block < n ? lo + block : n;
                for (std::size_t i = lo; i < hi; ++i) f(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
            next = n;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace dirac
