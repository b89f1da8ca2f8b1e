#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cycleforge {

// Worker cap: CYCLEFORGE_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("CYCLEFORGE_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

// Runs f(i) for i in [0, n). Results must be written to slots indexed by i, so the outcome does not
// depend on the schedule. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace cycleforge
