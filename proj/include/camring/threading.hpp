#ifndef CAMRING_THREADING_HPP
#define CAMRING_THREADING_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace camring {

/// CAMRING_THREADS, clamped to [1, 64]; defaults to 1.
inline int configured_threads() {
    const char* env = std::getenv("CAMRING_THREADS");
    if (!env)
        return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 1)
        return 1;
    return static_cast<int>(v > 64 ? 64 : v);
}

/// Runs fn(0..n-1), possibly on a small thread pool.  Work items must write
/// only to their own slots; results are independent of the schedule.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int threads = configured_threads();
    if (threads > n)
        threads = n;
    if (threads <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace camring

#endif
