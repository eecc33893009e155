#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace batchrmq {

/// Statically partitions [0, total) into at most `threads` contiguous chunks
/// and runs fn(begin, end, worker) on each. worker indices are dense from 0.
/// With threads <= 1 (or a single chunk) runs inline on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t total, unsigned threads, Fn&& fn) {
    if (total == 0) return;
    std::size_t parts = threads == 0 ? 1 : threads;
    if (parts > total) parts = total;
    if (parts <= 1) {
        fn(std::size_t{0}, total, 0u);
        return;
    }

    const std::size_t chunk = (total + parts - 1) / parts;
    std::vector<std::thread> pool;
    pool.reserve(parts - 1);
    std::vector<std::exception_ptr> errors(parts);

    auto run = [&](unsigned w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = begin + chunk < total ? begin + chunk : total;
        if (begin >= end) return;
        try {
            fn(begin, end, w);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    for (unsigned w = 1; w < parts; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace batchrmq
