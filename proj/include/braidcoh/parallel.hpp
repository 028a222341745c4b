#pragma once
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace braidcoh {

// BRAIDCOH_THREADS caps the worker count; unset means hardware concurrency
inline unsigned thread_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* s = std::getenv("BRAIDCOH_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), 256);
    }
    return std::min(hw, 16u);
}

// fn(i) for i in [0, n); every index is handled exactly once, results must be
// written to per-index slots so the outcome does not depend on scheduling
template <class Fn>
void parallel_for(size_t n, Fn&& fn)
{
    unsigned T = thread_count();
    if (T <= 1 || n < 16) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    T = static_cast<unsigned>(std::min<size_t>(T, n));
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
            try {
                for (size_t i = t; i < n; i += T) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(m);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace braidcoh
