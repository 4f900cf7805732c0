#include "atomsched/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "atomsched/errors.hpp"
#include "atomsched/workers.hpp"

namespace atomsched {

namespace {

std::vector<std::size_t> decode(const ProblemInstance& instance, std::uint64_t index) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(instance.size()));
  for (int n = instance.size() - 1; n >= 0; --n) {
    const std::uint64_t radix = instance.starts(n).size();
    digits[static_cast<std::size_t>(n)] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
  return digits;
}

}  // namespace

// Scans [begin, end). Loads of users 0..k-1 are cached per level so that a
// change of digit k only rebuilds levels k+1 onwards; the last user is folded
// in incrementally. The key is the cost in cents or the peak load.
RangeMinimum scan_range(const ProblemInstance& instance, ObjectiveKind objective,
                        std::uint64_t begin, std::uint64_t end) {
  const int users = instance.size();
  const auto h_slots = static_cast<std::size_t>(instance.slots());
  const Horizon& horizon = instance.horizon();
  const auto a = instance.cost_coefficients();
  const Appliance& last = instance.appliance(users - 1);
  const auto& last_starts = instance.starts(users - 1).starts;

  std::vector<std::size_t> digits = decode(instance, begin);
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(users),
                                          std::vector<double>(h_slots, 0.0));
  double base_cost = 0.0;
  auto rebuild_from = [&](int first_level) {
    for (int k = first_level; k < users; ++k) {
      auto& level = levels[static_cast<std::size_t>(k)];
      level = levels[static_cast<std::size_t>(k - 1)];
      const int s = instance.starts(k - 1).starts[digits[static_cast<std::size_t>(k - 1)]];
      add_placement(instance.appliance(k - 1), s, 1.0, horizon, level);
    }
    base_cost = energy_cost(levels.back(), CostModel(instance));
  };
  rebuild_from(1);

  RangeMinimum best{std::numeric_limits<double>::infinity(), begin, 0};
  if (begin >= end) return best;
  for (std::uint64_t index = begin; index < end; ++index) {
    const std::vector<double>& base = levels.back();
    const int s = last_starts[digits.back()];
    double key;
    if (objective == ObjectiveKind::Cost) {
      key = base_cost;
      for (int k = 0; k < last.delta; ++k) {
        const auto h = static_cast<std::size_t>(horizon.wrap(s + k));
        const double after = base[h] + last.gamma_op[static_cast<std::size_t>(k)];
        key += a[h] * (after * after - base[h] * base[h]);
      }
    } else {
      key = 0.0;
      for (std::size_t h = 0; h < h_slots; ++h) key = std::max(key, base[h]);
      for (int k = 0; k < last.delta; ++k) {
        const auto h = static_cast<std::size_t>(horizon.wrap(s + k));
        key = std::max(key, base[h] + last.gamma_op[static_cast<std::size_t>(k)]);
      }
    }
    ++best.evaluations;
    if (key < best.key) {
      best.key = key;
      best.index = index;
    }

    // Advance the odometer.
    int k = users - 1;
    while (k >= 0) {
      auto& d = digits[static_cast<std::size_t>(k)];
      if (++d < instance.starts(k).size()) break;
      d = 0;
      --k;
    }
    if (k < 0) break;
    if (k < users - 1) rebuild_from(k + 1);
  }
  return best;
}

Schedule schedule_at(const ProblemInstance& instance, std::uint64_t index) {
  const auto digits = decode(instance, index);
  Schedule schedule;
  for (int n = 0; n < instance.size(); ++n) {
    schedule.starts.push_back(instance.starts(n).starts[digits[static_cast<std::size_t>(n)]]);
  }
  return schedule;
}

OracleResult brute_force(const ProblemInstance& instance, ObjectiveKind objective,
                         std::uint64_t limit, int workers) {
  const BigInt size = enumeration_size(instance);
  if (size > limit) {
    throw TooLargeError(size.str(), fmt::format("feasible set has {} schedules, limit is {}",
                                                size.str(), limit));
  }
  const auto total = size.convert_to<std::uint64_t>();

  // Fixed chunking keeps the scan order of every range independent of the
  // thread count.
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t chunks = std::min(total, kChunks);
  std::vector<RangeMinimum> partial(chunks);
  parallel_for(chunks, worker_count(workers), [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    partial[c] = scan_range(instance, objective, begin, end);
  });

  RangeMinimum best{std::numeric_limits<double>::infinity(), 0, 0};
  std::uint64_t evaluations = 0;
  for (const RangeMinimum& p : partial) {
    evaluations += p.evaluations;
    if (p.evaluations > 0 && p.key < best.key) best = p;
  }

  OracleResult result;
  result.schedule = schedule_at(instance, best.index);
  result.objective_value = schedule_objective(instance, objective, result.schedule);
  result.evaluations = evaluations;
  return result;
}

}  // namespace atomsched
