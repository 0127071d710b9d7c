#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace edv {

inline int default_worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Split [0, count) into at most `workers` contiguous chunks and run
/// fn(begin, end, chunk_index) on each, possibly concurrently. Chunk
/// boundaries depend only on (count, workers), so per-chunk results can be
/// merged deterministically by chunk index.
template <class Fn>
void parallel_chunks(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    const std::size_t parts = std::min<std::size_t>(std::max(workers, 1), count);
    if (parts == 1) {
        fn(std::size_t{0}, count, 0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(parts);
    std::vector<std::exception_ptr> errors(parts);
    const std::size_t base = count / parts;
    const std::size_t rem = count % parts;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::size_t end = begin + base + (i < rem ? 1 : 0);
        threads.emplace_back([&fn, &errors, begin, end, i] {
            try {
                fn(begin, end, static_cast<int>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace edv
