#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace parity {

inline unsigned default_jobs() {
    unsigned j = std::thread::hardware_concurrency();
    return j ? j : 1u;
}

// Splits [0, total) into `jobs` contiguous blocks and runs fn(begin, end) for
// each on its own thread, returning the per-block results in block order.
// Block boundaries depend only on (total, jobs), so reducing the returned
// vector front to back gives the same answer as a sequential scan.
template <typename R, typename Fn>
std::vector<R> sweep_collect(std::uint64_t total, unsigned jobs, Fn fn) {
    if (jobs == 0) jobs = default_jobs();
    if (total < jobs) jobs = total ? static_cast<unsigned>(total) : 1u;

    std::vector<R> results(jobs);
    if (jobs == 1) {
        results[0] = fn(0, total);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) {
        std::uint64_t begin = total * i / jobs;
        std::uint64_t end = total * (i + 1) / jobs;
        workers.emplace_back([&results, i, begin, end, &fn] {
            results[i] = fn(begin, end);
        });
    }
    for (auto& w : workers) w.join();
    return results;
}

}  // namespace parity
