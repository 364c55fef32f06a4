#include "acolen/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace acolen {

int resolve_threads(int requested) {
    if (const char* env = std::getenv("ACOLEN_THREADS")) {
        try {
            requested = std::stoi(env);
        } catch (...) {
            // ignore malformed override
        }
    }
    if (requested <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        requested = hw ? static_cast<int>(hw) : 1;
    }
    return requested;
}

void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 1; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace acolen
