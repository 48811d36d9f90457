#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace iacprob {

// Resolves a requested worker count: values >= 1 are taken literally, anything
// else means "all available cores".
inline int resolve_threads(int requested) {
    if (requested >= 1) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies fn to every index in [0, count) and returns the results in index
// order.  Work is split into contiguous chunks, one per worker; because every
// result lands in its own slot and callers reduce in index order, the outcome
// is identical for any worker count.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, int threads, Fn&& fn) {
    std::vector<Result> results(count);
    if (count == 0) return results;
    std::size_t workers = std::min<std::size_t>(
        static_cast<std::size_t>(resolve_threads(threads)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t base = count / workers, extra = count % workers, begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t end = begin + base + (w < extra ? 1 : 0);
        pool.emplace_back([&, begin, end]() {
            try {
                for (std::size_t i = begin; i < end; ++i) results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace iacprob
