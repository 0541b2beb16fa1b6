#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace oddgraph {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Run fn(begin, end, worker) over [0, count) split into contiguous chunks,
// one per worker.  Deterministic results are the caller's job: workers write
// to disjoint slots and the caller merges in a fixed order.
template <class Fn>
void parallel_chunks(std::size_t count, int jobs, Fn fn) {
    jobs = resolve_jobs(jobs);
    std::size_t workers = std::min<std::size_t>(jobs, count);
    if (workers <= 1) {
        if (count) fn(std::size_t{0}, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = count * w / workers;
        std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([=] { fn(begin, end, static_cast<int>(w)); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace oddgraph
