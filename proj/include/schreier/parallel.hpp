#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace schreier {

/// Worker cap from SCHREIER_KIT_THREADS, else the hardware concurrency; at least 1.
std::size_t worker_count();

/**
 * Runs body(i) for i in [0, n) on up to worker_count() threads. Work is split
 * into contiguous chunks; callers write results into slot i, so output order
 * never depends on the schedule. The first exception thrown is rethrown here.
 */
template <class Body>
void parallel_for(std::size_t n, std::size_t max_workers, Body&& body)
{
    const std::size_t workers = std::min(max_workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        threads.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

template <class Body>
void parallel_for(std::size_t n, Body&& body)
{
    parallel_for(n, worker_count(), std::forward<Body>(body));
}

} // namespace schreier
