#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace nonoverlap {

inline unsigned default_workers() {
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Splits [0, total) into at most `workers` contiguous chunks and evaluates
/// fn(chunk, begin, end) -> R concurrently.  Results come back indexed by
/// chunk, so any fold over them is independent of thread scheduling.
template <typename R, typename Fn>
std::vector<R> run_chunks(std::uint64_t total, unsigned workers, Fn fn) {
    if (workers == 0) workers = 1;
    if (total > 0 && static_cast<std::uint64_t>(workers) > total)
        workers = static_cast<unsigned>(total);
    std::vector<R> results(workers);
    std::vector<std::exception_ptr> failures(workers);
    auto run = [&](unsigned c) {
        const std::uint64_t begin = total / workers * c + std::min<std::uint64_t>(c, total % workers);
        const std::uint64_t len = total / workers + (c < total % workers ? 1 : 0);
        try {
            results[c] = fn(c, begin, begin + len);
        } catch (...) {
            failures[c] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned c = 0; c < workers; ++c) pool.emplace_back(run, c);
        for (auto& th : pool) th.join();
    }
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
    return results;
}

}  // namespace nonoverlap
