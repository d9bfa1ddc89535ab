#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tri {

// Applies fn to 0..count-1 over `jobs` worker threads and collects the
// results in index order, so output is independent of scheduling. Work is
// handed out as whole indices via an atomic counter; results land in
// preallocated slots. The first exception thrown by any worker is rethrown
// on the calling thread after all workers join. jobs <= 1 runs inline.
template <typename R>
std::vector<R> parallel_map(int count, int jobs, const std::function<R(int)>& fn) {
    std::vector<R> out(count);
    if (count == 0) return out;
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    int workers = jobs < count ? jobs : count;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace tri
