#include "atomsched/scr.hpp"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "atomsched/errors.hpp"
#include "atomsched/relaxed_solver.hpp"

namespace atomsched {

void ScrConfig::validate() const {
  if (!(theta_d > 0.0 && theta_d < 1.0)) {
    throw ValidationError(fmt::format("theta_d={} must lie in (0, 1)", theta_d));
  }
  if (n_d < 1) throw ValidationError(fmt::format("n_d={} must be at least 1", n_d));
  if (!(eps_int > 0.0 && eps_int < 0.5) || !(eps_zero > 0.0 && eps_zero < 0.5)) {
    throw ValidationError("integrality tolerances must lie in (0, 0.5)");
  }
  if (max_iterations && *max_iterations < 1) {
    throw ValidationError("max_iterations must be positive");
  }
  if (!(solver.tolerance > 0.0)) throw ValidationError("solver tolerance must be positive");
}

bool is_integral(const FlowConfiguration& flows, double eps_int, double eps_zero) {
  for (int n = 0; n < flows.users(); ++n) {
    int ones = 0;
    for (int s = 0; s < flows.slots(); ++s) {
      const double v = flows(n, s);
      if (v >= 1.0 - eps_int) {
        ++ones;
      } else if (v > eps_zero) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

std::vector<DropSet::Element> select_drops(const ProblemInstance& instance,
                                           const FlowConfiguration& flows, const DropSet& dropped,
                                           const ScrConfig& config) {
  struct Candidate {
    double value;
    int n;
    int s;
  };
  std::vector<Candidate> candidates;
  for (int n = 0; n < instance.size(); ++n) {
    const auto& starts = instance.starts(n).starts;
    // Protected entry: row maximum, lowest slot among equal values.
    int best = -1;
    for (int s : starts) {
      if (dropped.contains(n, s)) continue;
      if (best < 0 || flows(n, s) > flows(n, best) || (flows(n, s) == flows(n, best) && s < best)) {
        best = s;
      }
    }
    for (int s : starts) {
      if (s == best || dropped.contains(n, s)) continue;
      const double v = flows(n, s);
      if (v < 1.0 - config.eps_int) candidates.push_back({v, n, s});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
    return std::tie(l.value, l.n, l.s) < std::tie(r.value, r.n, r.s);
  });

  std::vector<DropSet::Element> drops;
  for (const Candidate& c : candidates) {
    if (static_cast<int>(drops.size()) >= config.n_d) break;
    if (!drops.empty() && !(c.value < config.theta_d)) break;
    drops.emplace_back(c.n, c.s);
  }
  return drops;
}

namespace {

Schedule argmax_schedule(const ProblemInstance& instance, const FlowConfiguration& flows) {
  Schedule schedule;
  for (int n = 0; n < instance.size(); ++n) {
    int best = instance.starts(n).starts.front();
    for (int s : instance.starts(n).starts) {
      if (flows(n, s) > flows(n, best)) best = s;
    }
    schedule.starts.push_back(best);
  }
  check_schedule(instance, schedule);
  return schedule;
}

double to_reported_units(const ProblemInstance& instance, ObjectiveKind kind, double relaxed) {
  if (kind == ObjectiveKind::Cost) return relaxed;
  return instance.slots() * relaxed / instance.total_energy();
}

}  // namespace

ScrResult successive_convex_relaxation(const ProblemInstance& instance, ObjectiveKind objective,
                                       const ScrConfig& config, const QpBackend& backend) {
  config.validate();
  const int max_iterations =
      config.max_iterations.value_or(static_cast<int>(instance.total_start_count()));

  ScrResult result;
  DropSet dropped;
  for (int iteration = 1;; ++iteration) {
    if (iteration > max_iterations) {
      throw IterationLimitError(
          fmt::format("successive relaxation did not converge in {} iterations", max_iterations));
    }
    const RelaxedSolution relaxed =
        solve_relaxed(instance, objective, dropped, config.solver, backend);
    if (relaxed.solver_status != SolverStatus::Optimal) {
      throw SolverError(fmt::format("relaxation {} failed: {} after {} solver iterations",
                                    iteration, to_string(relaxed.solver_status),
                                    relaxed.iterations));
    }
    result.iterations = iteration;
    if (iteration == 1) {
      result.lower_bound = to_reported_units(instance, objective, relaxed.objective_value);
    }
    ScrIteration record{relaxed.objective_value, relaxed.iterations, {}};

    if (is_integral(relaxed.flows, config.eps_int, config.eps_zero)) {
      result.trace.push_back(std::move(record));
      result.schedule = argmax_schedule(instance, relaxed.flows);
      break;
    }

    record.dropped = select_drops(instance, relaxed.flows, dropped, config);
    if (record.dropped.empty()) {
      throw SolverError("fractional relaxation left no droppable entry");
    }
    for (const auto& [n, s] : record.dropped) {
      dropped.insert(n, s);
      result.drop_history.emplace_back(n, s);
    }
    result.trace.push_back(std::move(record));
  }
  result.upper_bound = schedule_objective(instance, objective, result.schedule);
  return result;
}

}  // namespace atomsched
