#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sphvar {

/** Worker count: SPHVAR_THREADS if set, otherwise the hardware concurrency. */
int thread_count();
void set_thread_count(int n);

/**
 * Splits [0, count) into contiguous static chunks, one per worker, and runs
 * body(begin, end, worker) on each. The partition depends only on count and
 * the worker count, so reductions combined in worker order are reproducible.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t, int)>& body);

/** Pairwise (cascade) summation, independent of thread count. */
double pairwise_sum(const double* x, std::size_t n);
inline double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), x.size()); }

} // namespace sphvar
