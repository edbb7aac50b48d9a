#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace homcolor {

// Runs fn(i) for i in [0, count). With workers <= 1 this is a plain loop;
// otherwise indices are striped across threads. Callers that merge results
// must do so by index so the outcome is independent of the worker count.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned t = std::min<unsigned>(workers, std::thread::hardware_concurrency());
    if (t == 0) t = 1;
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += t) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace homcolor
