#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace clfcong::detail {

// Runs fn(i) for every i in [0, count) on up to `workers` threads. Work items
// are claimed from a shared counter, so callers that write results into
// slot i get an output independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(workers, count);
    for (std::size_t t = 1; t < n; ++t)
        pool.emplace_back(body);
    body();
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace clfcong::detail
