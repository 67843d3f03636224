#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qmsd {

/// Number of workers used when callers pass 0.
inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

/// Runs `task(i)` for i in [0, count) on up to `workers` threads. Each index
/// is visited exactly once; tasks must write only to their own output slot.
template <class Task>
void parallel_for(std::size_t count, Task&& task, unsigned workers = 0) {
    if (count == 0) return;
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
        body();
    }
    if (failure) std::rethrow_exception(failure);
}

/// Pairwise (tree) summation of term(i) over [begin, end). The summation
/// order depends only on the range, never on threading.
template <class Term>
double pairwise_sum(std::size_t begin, std::size_t end, const Term& term) {
    constexpr std::size_t kLeaf = 32;
    if (end - begin <= kLeaf) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += term(i);
        return s;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_sum(begin, mid, term) + pairwise_sum(mid, end, term);
}

}  // namespace qmsd
