#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace imputebench {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count). Work is handed out through a shared atomic
// counter, so scheduling varies between runs; callers must write results into
// per-index slots to stay deterministic. The first exception thrown by any
// worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned n_threads, Fn&& fn) {
    n_threads = resolve_threads(n_threads);
    if (count == 0) return;
    if (n_threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr error;

    auto worker = [&]() {
        while (true) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (error || next >= count) return;
                i = next++;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, count));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace imputebench
