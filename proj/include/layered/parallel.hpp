#ifndef LAYERED_PARALLEL_HPP
#define LAYERED_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace layered {

// 0 means: LAYERED_JOBS if set, otherwise available parallelism.
inline unsigned resolve_jobs(unsigned requested) {
    if (requested != 0)
        return requested;
    if (const char* env = std::getenv("LAYERED_JOBS")) {
        unsigned v = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (v != 0)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Apply fn(chunk_lo, chunk_hi) over [lo, hi] split into fixed-width chunks.
// Results come back in chunk order, so the merged outcome is independent of
// the thread count.
template <typename T, typename Fn>
std::vector<T> map_chunks(std::uint64_t lo, std::uint64_t hi, std::uint64_t width, unsigned jobs,
                          Fn fn) {
    std::vector<T> out;
    if (lo > hi || width == 0)
        return out;
    const std::uint64_t count = (hi - lo) / width + 1;
    out.resize(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            std::uint64_t c_lo = lo + i * width;
            std::uint64_t c_hi = std::min(hi, c_lo + (width - 1));
            try {
                out[static_cast<std::size_t>(i)] = fn(c_lo, c_hi);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };

    unsigned nthreads = resolve_jobs(jobs);
    if (nthreads > count)
        nthreads = static_cast<unsigned>(count);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e); // first chunk in order wins
    return out;
}

} // namespace layered

#endif
