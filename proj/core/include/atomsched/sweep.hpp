#ifndef ATOMSCHED_SWEEP_HPP
#define ATOMSCHED_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "atomsched/catalog.hpp"
#include "atomsched/objectives.hpp"
#include "atomsched/scr.hpp"

namespace atomsched {

struct SweepRow {
  int users = 0;
  int n_d = 0;
  std::uint64_t seed = 0;
  ObjectiveKind objective = ObjectiveKind::Cost;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double gap = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
};

struct SweepSpec {
  std::vector<int> sizes;
  std::vector<int> n_d_list;
  std::vector<std::uint64_t> seeds;
  ObjectiveKind objective = ObjectiveKind::Cost;
  ScrConfig base;  // n_d is overridden per row
  bool record_wall_time = true;
  int workers = 0;  // 0 = worker_count()
};

// One row per (size, n_d, seed) in that nesting order, independent of how
// runs are spread over workers. Instances come from generate_instance.
std::vector<SweepRow> scr_sweep(const SweepSpec& spec,
                                const ApplianceCatalog& catalog = ApplianceCatalog::defaults());

}  // namespace atomsched

#endif  // ATOMSCHED_SWEEP_HPP
