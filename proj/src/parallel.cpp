#include "goodman/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace goodman {

std::size_t workerCount() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GOODMAN_LAB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<std::size_t>(cap) < n) n = static_cast<std::size_t>(cap);
    }
    return n;
}

void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(workerCount(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            const std::size_t chunk = 64;
            for (;;) {
                const std::size_t start = next.fetch_add(chunk);
                if (start >= n) break;
                const std::size_t end = std::min(n, start + chunk);
                for (std::size_t i = start; i < end; ++i) fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace goodman
