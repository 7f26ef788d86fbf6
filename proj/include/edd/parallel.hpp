#ifndef EDD_PARALLEL_HPP
#define EDD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace edd {

/// Global cap on worker threads for all library kernels. 0 restores the
/// hardware default. Thread-safe.
void set_max_threads(int n);

/// Current cap (>= 1).
int max_threads();

/// Workers actually used for a job of n_items, keeping at least
/// min_items_per_worker per thread so tiny jobs stay single-threaded.
int plan_workers(std::size_t n_items, std::size_t min_items_per_worker);

/// Runs body(worker_index) on n_workers threads and joins them all.
/// n_workers == 1 runs inline. Callers are responsible for writing to
/// disjoint output ranges; every kernel built on this must produce output
/// that does not depend on the worker count.
void run_workers(int n_workers, const std::function<void(int)>& body);

}  // namespace edd

#endif  // EDD_PARALLEL_HPP
