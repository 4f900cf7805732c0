#ifndef ATOMSCHED_SCR_HPP
#define ATOMSCHED_SCR_HPP

// Successive convex relaxation.
//
// Repeatedly solve the relaxation, then permanently pin small fractional flow
// entries to zero until every user's row is one-hot. Per iteration the
// smallest unprotected entry is always dropped, followed by further entries
// in ascending order while they stay below theta_d, for at most n_d drops in
// total. The largest entry of each row (lowest slot on ties) is protected.

#include <optional>
#include <vector>

#include "atomsched/core_model.hpp"
#include "atomsched/flow.hpp"
#include "atomsched/interior_point.hpp"
#include "atomsched/objectives.hpp"

namespace atomsched {

struct ScrConfig {
  double theta_d = 0.1;
  int n_d = 1;
  double eps_int = 1e-6;
  double eps_zero = 1e-6;
  // Defaults to sum_n |S_n| when unset.
  std::optional<int> max_iterations;
  SolverSettings solver;

  void validate() const;  // throws ValidationError
};

struct ScrIteration {
  double relaxed_objective = 0.0;  // cents, or Gamma in kWh for Par
  int solver_iterations = 0;
  std::vector<DropSet::Element> dropped;  // empty on the final iteration
};

struct ScrResult {
  Schedule schedule;
  double upper_bound = 0.0;  // Boolean objective of `schedule` (cents or PAR ratio)
  double lower_bound = 0.0;  // first relaxation optimum, same units as upper_bound
  int iterations = 0;
  std::vector<ScrIteration> trace;
  std::vector<DropSet::Element> drop_history;  // in drop order

  double gap() const noexcept { return upper_bound - lower_bound; }
};

ScrResult successive_convex_relaxation(const ProblemInstance& instance, ObjectiveKind objective,
                                       const ScrConfig& config = {},
                                       const QpBackend& backend = default_backend());

// Entries chosen for dropping from a relaxed solution under `config`; exposed
// for testing the selection rule in isolation.
std::vector<DropSet::Element> select_drops(const ProblemInstance& instance,
                                           const FlowConfiguration& flows, const DropSet& dropped,
                                           const ScrConfig& config);

// True when every row has one entry >= 1 - eps_int and the rest <= eps_zero.
bool is_integral(const FlowConfiguration& flows, double eps_int, double eps_zero);

}  // namespace atomsched

#endif  // ATOMSCHED_SCR_HPP
