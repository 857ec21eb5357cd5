#pragma once

// Deterministic index-parallel loop: every index writes its own output slot,
// so results are independent of scheduling. The first exception thrown by a
// worker is rethrown in the calling thread.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace barriertop::detail {

template <class F>
void parallel_for(std::size_t n, F&& f) {
    if (n == 0) return;
    const unsigned hw = std::thread::hardware_concurrency();
    std::size_t nt = std::min<std::size_t>(std::max(1u, hw), 8);
    nt = std::min(nt, n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f, &first_error, &error_mutex] {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace barriertop::detail
