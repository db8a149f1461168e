#pragma once

#include <cstddef>
#include <functional>

namespace pgsurf {

/// Uniform tensor grid over [u1_lo, u1_hi] x [u2_lo, u2_hi], row-major in u2 then u1:
/// index = i1 * n2 + i2.
struct Grid2 {
    double u1_lo = 0.0;
    double u1_hi = 1.0;
    double u2_lo = 0.0;
    double u2_hi = 1.0;
    std::size_t n1 = 2;
    std::size_t n2 = 2;

    std::size_t size() const { return n1 * n2; }
    double u1(std::size_t i1) const;
    double u2(std::size_t i2) const;

    /// Throws GridRejected on n < 2, reversed or non-finite ranges.
    void validate() const;
};

/// Number of worker threads: PG_SURF_THREADS if set and positive, else hardware concurrency.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers write results
/// into slot i so output order does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 1);

}  // namespace pgsurf
