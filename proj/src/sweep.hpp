#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "lrorder/instances.hpp"

namespace lrorder::detail {

struct ShapeItem {
    Partition beta;
    Partition gamma;
};

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    const int n = static_cast<int>(std::min<std::size_t>(jobs, count));
    for (int w = 0; w < n; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& t : workers)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

/// Feeds generated shapes through work() in batches, possibly in parallel,
/// and hands the results to emit() in generation order.
template <class Result, class Generate, class Work, class Emit>
void chunked_sweep(Generate&& generate, int jobs, Work&& work, Emit&& emit, std::size_t chunk = 2048) {
    std::vector<ShapeItem> batch;
    auto flush = [&] {
        std::vector<Result> results(batch.size());
        parallel_for(batch.size(), jobs, [&](std::size_t i) { results[i] = work(batch[i]); });
        for (auto& r : results)
            emit(std::move(r));
        batch.clear();
    };
    generate([&](const Partition& beta, const Partition& gamma) {
        batch.push_back({beta, gamma});
        if (batch.size() >= chunk)
            flush();
    });
    flush();
}

} // namespace lrorder::detail
