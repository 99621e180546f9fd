#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cvd {

/// Number of workers to use: explicit count, else the CVD_SIM_WORKERS
/// environment variable, else hardware concurrency.
unsigned resolve_workers(unsigned requested = 0);

/// Runs fn(block_index, begin, end) over [0, n) split into fixed-size
/// blocks. The partition depends only on block_size, never on the worker
/// count, so per-block outputs combined in block order are identical for
/// any number of threads. Exceptions propagate to the caller.
template <typename Fn>
void parallel_blocks(std::size_t n, std::size_t block_size, unsigned workers,
                     Fn&& fn) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (n + block_size - 1) / block_size;
    workers = resolve_workers(workers);
    if (workers > n_blocks) workers = static_cast<unsigned>(n_blocks);

    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) {
            const std::size_t begin = b * block_size;
            const std::size_t end = begin + block_size < n ? begin + block_size : n;
            fn(b, begin, end);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            const std::size_t begin = b * block_size;
            const std::size_t end = begin + block_size < n ? begin + block_size : n;
            try {
                fn(b, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace cvd
