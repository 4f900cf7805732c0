#include "atomsched/sweep.hpp"

#include <chrono>

#include "atomsched/generator.hpp"
#include "atomsched/workers.hpp"

namespace atomsched {

std::vector<SweepRow> scr_sweep(const SweepSpec& spec, const ApplianceCatalog& catalog) {
  std::vector<SweepRow> rows;
  for (int users : spec.sizes) {
    for (int n_d : spec.n_d_list) {
      for (std::uint64_t seed : spec.seeds) {
        rows.push_back({users, n_d, seed, spec.objective, 0.0, 0.0, 0.0, 0, 0.0});
      }
    }
  }
  parallel_for(rows.size(), worker_count(spec.workers), [&](std::size_t i) {
    SweepRow& row = rows[i];
    const ProblemInstance instance = generate_instance(row.users, row.seed, catalog);
    ScrConfig config = spec.base;
    config.n_d = row.n_d;
    const auto start = std::chrono::steady_clock::now();
    const ScrResult result = successive_convex_relaxation(instance, spec.objective, config);
    const auto stop = std::chrono::steady_clock::now();
    row.lower_bound = result.lower_bound;
    row.upper_bound = result.upper_bound;
    row.gap = result.gap();
    row.iterations = result.iterations;
    if (spec.record_wall_time) {
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  });
  return rows;
}

}  // namespace atomsched
