#include "pgsurf/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "pgsurf/errors.hpp"

namespace pgsurf {

double Grid2::u1(std::size_t i1) const {
    return u1_lo + (u1_hi - u1_lo) * static_cast<double>(i1) / static_cast<double>(n1 - 1);
}

double Grid2::u2(std::size_t i2) const {
    return u2_lo + (u2_hi - u2_lo) * static_cast<double>(i2) / static_cast<double>(n2 - 1);
}

void Grid2::validate() const {
    if (n1 < 2 || n2 < 2) {
        throw GridRejected("grid resolution must be at least 2 per axis");
    }
    for (double v : {u1_lo, u1_hi, u2_lo, u2_hi}) {
        if (!std::isfinite(v)) {
            throw GridRejected("grid range must be finite");
        }
    }
    if (!(u1_lo < u1_hi) || !(u2_lo < u2_hi)) {
        throw GridRejected("grid range must be increasing");
    }
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("PG_SURF_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t threads) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace pgsurf
