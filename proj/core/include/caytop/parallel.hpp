#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace caytop {

// Runs fn(i) for every i in [begin, end) on up to `jobs` threads, pulling
// indices from a shared counter. The first exception thrown by any worker
// stops the pool (after in-flight calls finish) and is rethrown here.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned jobs, Fn&& fn) {
    if (end <= begin) return;
    std::size_t total = end - begin;
    if (jobs <= 1 || total == 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{begin};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, total));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= end) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace caytop
