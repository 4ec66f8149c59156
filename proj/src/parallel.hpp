#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zetalab {

inline unsigned worker_count() {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) hc = 1;
    return hc > 16 ? 16u : hc;
}

namespace detail {
inline thread_local int parallel_depth = 0;
}

// Runs fn(i) for i in [0, n). Work items are claimed from an atomic counter,
// so fn must write results only to its own slot; reductions happen afterwards
// in index order, which keeps results identical for any thread count.
// Nested calls degrade to serial loops instead of oversubscribing.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    unsigned workers = worker_count();
    if (n <= 1 || workers == 1 || detail::parallel_depth > 0) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        detail::parallel_depth++;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                break;
            }
        }
        detail::parallel_depth--;
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// Neumaier-compensated accumulator.
struct CompensatedSum {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            c += (sum - t) + v;
        else
            c += (v - t) + sum;
        sum = t;
    }
    double result() const { return sum + c; }
};

// Splits [lo, hi) into fixed-size blocks, evaluates them (possibly in
// parallel) and combines the block sums in ascending block order. The block
// size is a constant of the caller, never derived from the thread count, so
// the reduction is bit-reproducible.
inline double parallel_block_sum(std::size_t lo, std::size_t hi, std::size_t block,
                                 const std::function<double(std::size_t, std::size_t)>& block_fn) {
    if (hi <= lo) return 0.0;
    std::size_t nblocks = (hi - lo + block - 1) / block;
    std::vector<double> partial(nblocks);
    parallel_for(nblocks, [&](std::size_t b) {
        std::size_t b_lo = lo + b * block;
        std::size_t b_hi = b_lo + block < hi ? b_lo + block : hi;
        partial[b] = block_fn(b_lo, b_hi);
    });
    CompensatedSum acc;
    for (double v : partial) acc.add(v);
    return acc.result();
}

} // namespace zetalab
