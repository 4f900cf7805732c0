#ifndef ATOMSCHED_WORKERS_HPP
#define ATOMSCHED_WORKERS_HPP

#include <cstddef>
#include <functional>

namespace atomsched {

// Environment variable capping the number of worker threads.
inline constexpr const char* kWorkersEnv = "ATOMSCHED_WORKERS";

// `requested` if positive, otherwise the ATOMSCHED_WORKERS cap or the hardware
// concurrency; never less than one.
int worker_count(int requested = 0);

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
// claimed in index order; the first exception thrown is rethrown after all
// threads have joined.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& task);

}  // namespace atomsched

#endif  // ATOMSCHED_WORKERS_HPP
