#include "atomsched/flow.hpp"

#include <cmath>

#include <fmt/format.h>

#include "atomsched/errors.hpp"

namespace atomsched {

void DropSet::validate(const ProblemInstance& instance) const {
  std::vector<std::size_t> dropped_per_user(static_cast<std::size_t>(instance.size()), 0);
  for (const auto& [n, s] : dropped_) {
    if (n < 0 || n >= instance.size()) {
      throw ValidationError(fmt::format("drop set names unknown user {}", n));
    }
    if (!instance.starts(n).contains(s)) {
      throw ValidationError(fmt::format("drop set entry ({}, {}) is not a feasible start", n, s));
    }
    ++dropped_per_user[static_cast<std::size_t>(n)];
  }
  for (int n = 0; n < instance.size(); ++n) {
    if (dropped_per_user[static_cast<std::size_t>(n)] >= instance.starts(n).size()) {
      throw ValidationError(fmt::format("drop set removes every start of user {}", n));
    }
  }
}

void check_relaxed_feasible(const ProblemInstance& instance, const FlowConfiguration& flows,
                            double tolerance) {
  const int n_users = instance.size();
  const int h = instance.slots();
  if (flows.users() != n_users || flows.slots() != h) {
    throw ValidationError(fmt::format("flow matrix is {}x{}, expected {}x{}", flows.users(),
                                      flows.slots(), n_users, h));
  }
  for (int n = 0; n < n_users; ++n) {
    const StartSet& set = instance.starts(n);
    double row_sum = 0.0;
    for (int s = 0; s < h; ++s) {
      const double v = flows(n, s);
      if (!std::isfinite(v)) {
        throw ValidationError(fmt::format("flow ({}, {}) is not finite", n, s));
      }
      if (!set.contains(s)) {
        if (std::abs(v) > tolerance) {
          throw ValidationError(
              fmt::format("flow ({}, {})={} outside the feasible start set", n, s, v));
        }
        continue;
      }
      if (v < -tolerance || v > 1.0 + tolerance) {
        throw ValidationError(fmt::format("flow ({}, {})={} outside [0, 1]", n, s, v));
      }
      row_sum += v;
    }
    if (std::abs(row_sum - 1.0) > tolerance) {
      throw ValidationError(fmt::format("flow row {} sums to {}, expected 1", n, row_sum));
    }
  }
}

void check_schedule(const ProblemInstance& instance, const Schedule& schedule) {
  if (schedule.starts.size() != static_cast<std::size_t>(instance.size())) {
    throw ValidationError(fmt::format("schedule has {} starts, expected {}",
                                      schedule.starts.size(), instance.size()));
  }
  for (int n = 0; n < instance.size(); ++n) {
    const int s = schedule.starts[static_cast<std::size_t>(n)];
    if (!instance.starts(n).contains(s)) {
      throw ValidationError(fmt::format("start {} is not feasible for appliance '{}'", s,
                                        instance.appliance(n).name));
    }
  }
}

void add_placement(const Appliance& appliance, int start, double weight, const Horizon& horizon,
                   std::span<double> loads) {
  for (int k = 0; k < appliance.delta; ++k) {
    loads[static_cast<std::size_t>(horizon.wrap(start + k))] +=
        weight * appliance.gamma_op[static_cast<std::size_t>(k)];
  }
}

LoadProfile load_profile(const ProblemInstance& instance, const FlowConfiguration& flows) {
  check_relaxed_feasible(instance, flows);
  LoadProfile loads(static_cast<std::size_t>(instance.slots()), 0.0);
  for (int n = 0; n < instance.size(); ++n) {
    for (int s : instance.starts(n).starts) {
      const double f = flows(n, s);
      if (f != 0.0) add_placement(instance.appliance(n), s, f, instance.horizon(), loads);
    }
  }
  return loads;
}

LoadProfile load_profile_from_schedule(const ProblemInstance& instance, const Schedule& schedule) {
  check_schedule(instance, schedule);
  LoadProfile loads(static_cast<std::size_t>(instance.slots()), 0.0);
  for (int n = 0; n < instance.size(); ++n) {
    add_placement(instance.appliance(n), schedule.starts[static_cast<std::size_t>(n)], 1.0,
                  instance.horizon(), loads);
  }
  return loads;
}

FlowConfiguration schedule_to_flows(const ProblemInstance& instance, const Schedule& schedule) {
  check_schedule(instance, schedule);
  FlowConfiguration flows{Eigen::MatrixXd::Zero(instance.size(), instance.slots())};
  for (int n = 0; n < instance.size(); ++n) {
    flows.values(n, schedule.starts[static_cast<std::size_t>(n)]) = 1.0;
  }
  return flows;
}

Schedule flows_to_schedule(const ProblemInstance& instance, const FlowConfiguration& flows,
                           double eps_int) {
  check_relaxed_feasible(instance, flows);
  Schedule schedule;
  schedule.starts.reserve(static_cast<std::size_t>(instance.size()));
  for (int n = 0; n < instance.size(); ++n) {
    int best = 0;
    for (int s = 1; s < instance.slots(); ++s) {
      if (flows(n, s) > flows(n, best)) best = s;
    }
    bool integral = flows(n, best) >= 1.0 - eps_int;
    for (int s = 0; integral && s < instance.slots(); ++s) {
      if (s != best && flows(n, s) > eps_int) integral = false;
    }
    if (!integral) {
      throw NotIntegralError(n, fmt::format("flow row {} is fractional (max {} at slot {})", n,
                                            flows(n, best), best));
    }
    schedule.starts.push_back(best);
  }
  return schedule;
}

}  // namespace atomsched
