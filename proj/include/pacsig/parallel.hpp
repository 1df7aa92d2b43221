#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace pacsig::detail {

// Runs fn(i) for i in [0, count) across hardware threads. Callers keep
// determinism by writing into per-index slots and reducing afterwards.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    if (count == 0) return;
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const std::size_t chunk = (count + workers - 1) / workers;
    auto run = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
            if (!error) error = std::current_exception();
        }
    };
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(run, w * chunk, std::min(count, (w + 1) * chunk));
    run(0, std::min(count, chunk));
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace pacsig::detail
