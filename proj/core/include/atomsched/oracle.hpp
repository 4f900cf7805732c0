#ifndef ATOMSCHED_ORACLE_HPP
#define ATOMSCHED_ORACLE_HPP

// Global optimum by direct enumeration of every start-slot combination.

#include <cstdint>

#include "atomsched/core_model.hpp"
#include "atomsched/flow.hpp"
#include "atomsched/objectives.hpp"

namespace atomsched {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 100'000'000;

struct OracleResult {
  Schedule schedule;
  double objective_value = 0.0;  // cents, or PAR ratio
  BigInt evaluations = 0;
};

// Scans the Cartesian product of start sets in mixed-radix order (user 0 most
// significant, starts in pre-modulo order) and returns the first minimum.
// Contiguous index ranges are scanned by up to `workers` threads (0 = default)
// and merged in range order, so the result does not depend on the worker count.
// Throws TooLargeError when enumeration_size(instance) exceeds `limit`.
OracleResult brute_force(const ProblemInstance& instance, ObjectiveKind objective,
                         std::uint64_t limit = kDefaultEnumerationLimit, int workers = 0);

// Minimum of one contiguous index range of the enumeration order. `key` is the
// cost in cents or the peak load in kWh; `index` is the first index reaching it.
struct RangeMinimum {
  double key = 0.0;
  std::uint64_t index = 0;
  std::uint64_t evaluations = 0;
};

RangeMinimum scan_range(const ProblemInstance& instance, ObjectiveKind objective,
                        std::uint64_t begin, std::uint64_t end);

// Schedule at a mixed-radix index of the enumeration order.
Schedule schedule_at(const ProblemInstance& instance, std::uint64_t index);

}  // namespace atomsched

#endif  // ATOMSCHED_ORACLE_HPP
