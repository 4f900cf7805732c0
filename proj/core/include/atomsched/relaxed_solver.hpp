#ifndef ATOMSCHED_RELAXED_SOLVER_HPP
#define ATOMSCHED_RELAXED_SOLVER_HPP

#include "atomsched/core_model.hpp"
#include "atomsched/flow.hpp"
#include "atomsched/interior_point.hpp"
#include "atomsched/objectives.hpp"

namespace atomsched {

struct RelaxedSolution {
  FlowConfiguration flows;
  // Cents for Cost; peak load Gamma in kWh for Par. Always recomputed from
  // `flows`.
  double objective_value = 0.0;
  SolverStatus solver_status = SolverStatus::NumericalFailure;
  int iterations = 0;
};

// Minimizes sum_h a_h L_h(f)^2 over the relaxed flow polytope with every
// element of `dropped` pinned to zero. Throws SolverError on backend failure
// and ValidationError if `dropped` empties a row.
RelaxedSolution solve_relaxed_cost(const ProblemInstance& instance, const DropSet& dropped,
                                   const SolverSettings& settings = {},
                                   const QpBackend& backend = default_backend());

// Minimizes Gamma subject to Gamma >= L_h(f) for every slot over the same
// polytope. Gamma itself is never dropped.
RelaxedSolution solve_relaxed_par(const ProblemInstance& instance, const DropSet& dropped,
                                  const SolverSettings& settings = {},
                                  const QpBackend& backend = default_backend());

RelaxedSolution solve_relaxed(const ProblemInstance& instance, ObjectiveKind kind,
                              const DropSet& dropped, const SolverSettings& settings = {},
                              const QpBackend& backend = default_backend());

}  // namespace atomsched

#endif  // ATOMSCHED_RELAXED_SOLVER_HPP
