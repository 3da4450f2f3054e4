#ifndef APN_PARALLEL_HPP
#define APN_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace apn {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(chunk_index, begin, end) on `threads` contiguous chunks of [0, n).
/// Callers merge per-chunk results in chunk order so output does not depend
/// on the thread count.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        fn(0, std::size_t{0}, n);
        return;
    }
    if (threads > n) threads = unsigned(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::size_t per = n / threads, extra = n % threads, begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t len = per + (t < extra ? 1 : 0);
        pool.emplace_back(fn, t, begin, begin + len);
        begin += len;
    }
    for (auto& th : pool) th.join();
}

} // namespace apn

#endif
