#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace grasstilt {

/// Runs f(0), ..., f(n-1) on up to `parallelism` threads pulling indices from
/// a shared counter. Results come back in index order, so aggregation does not
/// depend on scheduling. The first exception thrown by a job is rethrown.
template <typename F>
auto parallel_map(std::size_t n, int parallelism, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> results(n);
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(parallelism, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = f(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back(work);
    pool.clear();
    if (error)
        std::rethrow_exception(error);
    return results;
}

}  // namespace grasstilt
