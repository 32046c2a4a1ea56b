#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace junctionlab {

/// Applies fn(i) for i in [0, n) and collects the results in index order.
/// Each index is computed independently, so the output is bitwise identical
/// for any thread count.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, int threads, Fn&& fn) {
    std::vector<T> out(n);
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers)) {
                out[i] = fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace junctionlab
