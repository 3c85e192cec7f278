#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "torsor/integers.hpp"

namespace torsor {

// Worker count: explicit argument wins, then TORSOR_COUNT_WORKERS, then 1.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TORSOR_COUNT_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

// Sum of fn(task) over tasks, pulled from a shared queue. The result does not
// depend on the worker count (integer addition over disjoint tasks).
template <class Task, class Fn>
i64 parallel_sum_tasks(const std::vector<Task>& tasks, int workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || tasks.size() <= 1) {
        i64 total = 0;
        for (const auto& t : tasks) total += fn(t);
        return total;
    }
    std::atomic<size_t> next{0};
    std::vector<i64> partial(static_cast<size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            i64 local = 0;
            for (;;) {
                size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= tasks.size()) break;
                local += fn(tasks[i]);
            }
            partial[static_cast<size_t>(w)] = local;
        });
    }
    for (auto& th : pool) th.join();
    i64 total = 0;
    for (i64 p : partial) total += p;
    return total;
}

}  // namespace torsor
