#ifndef ATOMSCHED_FLOW_HPP
#define ATOMSCHED_FLOW_HPP

// Flow-based view of a schedule.
//
// Row n of a flow configuration holds one value per start slot: f(n, s) is the
// amount of user n's operation that begins at slot s. A Boolean configuration
// has a single 1 per row; the convex relaxation allows any point of the
// simplex over the feasible starts.

#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "atomsched/core_model.hpp"

namespace atomsched {

inline constexpr double kFeasibilityTolerance = 1e-9;

struct FlowConfiguration {
  Eigen::MatrixXd values;  // N x H

  double operator()(int n, int s) const { return values(n, s); }
  int users() const noexcept { return static_cast<int>(values.rows()); }
  int slots() const noexcept { return static_cast<int>(values.cols()); }
};

struct Schedule {
  std::vector<int> starts;  // one start slot per user

  bool operator==(const Schedule&) const = default;
};

using LoadProfile = std::vector<double>;

// Set of (user, start slot) pairs pinned to zero.
class DropSet {
 public:
  using Element = std::pair<int, int>;

  bool insert(int n, int s) { return dropped_.emplace(n, s).second; }
  bool contains(int n, int s) const { return dropped_.count({n, s}) != 0; }
  std::size_t size() const noexcept { return dropped_.size(); }
  bool empty() const noexcept { return dropped_.empty(); }
  const std::set<Element>& elements() const noexcept { return dropped_; }

  // Every pair must name a feasible start and every user must keep at least
  // one undropped start. Throws ValidationError.
  void validate(const ProblemInstance& instance) const;

  bool operator==(const DropSet&) const = default;

 private:
  std::set<Element> dropped_;
};

// Throws ValidationError unless `flows` is N x H, vanishes outside the start
// sets, lies in [0, 1] and has unit row sums, all within `tolerance`.
void check_relaxed_feasible(const ProblemInstance& instance, const FlowConfiguration& flows,
                            double tolerance = kFeasibilityTolerance);

// Throws ValidationError unless every s_n belongs to its start set.
void check_schedule(const ProblemInstance& instance, const Schedule& schedule);

LoadProfile load_profile(const ProblemInstance& instance, const FlowConfiguration& flows);

LoadProfile load_profile_from_schedule(const ProblemInstance& instance, const Schedule& schedule);

FlowConfiguration schedule_to_flows(const ProblemInstance& instance, const Schedule& schedule);

// Throws NotIntegralError naming the first row that is not one-hot within
// eps_int (max >= 1 - eps_int, every other entry <= eps_int).
Schedule flows_to_schedule(const ProblemInstance& instance, const FlowConfiguration& flows,
                           double eps_int = 1e-6);

// Adds the placement of `appliance` starting at `start` to `loads`.
void add_placement(const Appliance& appliance, int start, double weight, const Horizon& horizon,
                   std::span<double> loads);

}  // namespace atomsched

#endif  // ATOMSCHED_FLOW_HPP
