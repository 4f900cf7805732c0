#include "atomsched/relaxed_solver.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "atomsched/errors.hpp"

namespace atomsched {

namespace {

using Triplet = Eigen::Triplet<double>;

// Feasible, undropped flow entries become the leading QP variables; the
// remaining entries of the N x H matrix are eliminated.
struct FlowVariables {
  std::vector<std::pair<int, int>> entries;  // (user, start slot)
};

FlowVariables collect_flow_variables(const ProblemInstance& instance, const DropSet& dropped) {
  dropped.validate(instance);
  FlowVariables vars;
  vars.entries.reserve(instance.total_start_count());
  for (int n = 0; n < instance.size(); ++n) {
    for (int s : instance.starts(n).starts) {
      if (!dropped.contains(n, s)) vars.entries.emplace_back(n, s);
    }
  }
  return vars;
}

// Rows 0..N-1: sum of user n's flows equals one. Returns the triplets and
// records, for every slot, the (variable, level) pairs that load it.
void add_flow_structure(const ProblemInstance& instance, const FlowVariables& vars,
                        std::vector<Triplet>& triplets,
                        std::vector<std::vector<std::pair<int, double>>>& slot_terms) {
  slot_terms.assign(static_cast<std::size_t>(instance.slots()), {});
  for (std::size_t j = 0; j < vars.entries.size(); ++j) {
    const auto [n, s] = vars.entries[j];
    const int col = static_cast<int>(j);
    triplets.emplace_back(n, col, 1.0);
    const Appliance& a = instance.appliance(n);
    for (int k = 0; k < a.delta; ++k) {
      slot_terms[static_cast<std::size_t>(instance.horizon().wrap(s + k))].emplace_back(
          col, a.level(k));
    }
  }
}

RelaxedSolution finish(const ProblemInstance& instance, ObjectiveKind kind,
                       const FlowVariables& vars, const QpSolution& qp) {
  RelaxedSolution out;
  out.iterations = qp.iterations;
  out.solver_status = qp.status;
  out.flows.values = Eigen::MatrixXd::Zero(instance.size(), instance.slots());
  for (std::size_t j = 0; j < vars.entries.size(); ++j) {
    const auto [n, s] = vars.entries[j];
    double v = qp.x[static_cast<Eigen::Index>(j)];
    if (v < 0.0 && v >= -kFeasibilityTolerance) v = 0.0;
    if (v > 1.0 && v <= 1.0 + kFeasibilityTolerance) v = 1.0;
    out.flows.values(n, s) = v;
  }
  if (qp.status != SolverStatus::Optimal) return out;

  try {
    check_relaxed_feasible(instance, out.flows, 1e-6);
  } catch (const ValidationError&) {
    out.solver_status = SolverStatus::NumericalFailure;
    return out;
  }
  // Remove the residual row-sum slack left by the interior point.
  for (int n = 0; n < instance.size(); ++n) {
    const double row_sum = out.flows.values.row(n).sum();
    out.flows.values.row(n) /= row_sum;
  }
  const LoadProfile loads = load_profile(instance, out.flows);
  out.objective_value =
      kind == ObjectiveKind::Cost ? energy_cost(loads, CostModel(instance)) : peak_load(loads);
  return out;
}

}  // namespace

RelaxedSolution solve_relaxed_cost(const ProblemInstance& instance, const DropSet& dropped,
                                   const SolverSettings& settings, const QpBackend& backend) {
  const FlowVariables vars = collect_flow_variables(instance, dropped);
  std::vector<Triplet> triplets;
  std::vector<std::vector<std::pair<int, double>>> slot_terms;
  add_flow_structure(instance, vars, triplets, slot_terms);

  // One free load variable per priced slot: L_h - sum(level * f) = 0 with
  // objective a_h L_h^2. Slots with a_h = 0 impose nothing and are skipped.
  const auto a = instance.cost_coefficients();
  const int n_flow = static_cast<int>(vars.entries.size());
  int col = n_flow;
  int row = instance.size();
  std::vector<double> quad;
  for (int h = 0; h < instance.slots(); ++h) {
    const double weight = a[static_cast<std::size_t>(h)];
    if (weight == 0.0) continue;
    for (const auto& [j, level] : slot_terms[static_cast<std::size_t>(h)]) {
      triplets.emplace_back(row, j, level);
    }
    triplets.emplace_back(row, col, -1.0);
    quad.push_back(2.0 * weight);
    ++row;
    ++col;
  }

  QpProblem qp;
  qp.linear = Eigen::VectorXd::Zero(col);
  qp.diagonal = Eigen::VectorXd::Zero(col);
  for (std::size_t k = 0; k < quad.size(); ++k) qp.diagonal[n_flow + static_cast<int>(k)] = quad[k];
  qp.nonnegative.assign(static_cast<std::size_t>(col), false);
  std::fill_n(qp.nonnegative.begin(), n_flow, true);
  qp.constraints.resize(row, col);
  qp.constraints.setFromTriplets(triplets.begin(), triplets.end());
  qp.rhs = Eigen::VectorXd::Zero(row);
  qp.rhs.head(instance.size()).setOnes();

  return finish(instance, ObjectiveKind::Cost, vars, backend.solve(qp, settings));
}

RelaxedSolution solve_relaxed_par(const ProblemInstance& instance, const DropSet& dropped,
                                  const SolverSettings& settings, const QpBackend& backend) {
  const FlowVariables vars = collect_flow_variables(instance, dropped);
  std::vector<Triplet> triplets;
  std::vector<std::vector<std::pair<int, double>>> slot_terms;
  add_flow_structure(instance, vars, triplets, slot_terms);

  // sum(level * f) - Gamma + t_h = 0 with t_h >= 0, i.e. Gamma >= L_h.
  const int n_flow = static_cast<int>(vars.entries.size());
  const int peak = n_flow;
  const int h_slots = instance.slots();
  for (int h = 0; h < h_slots; ++h) {
    const int row = instance.size() + h;
    for (const auto& [j, level] : slot_terms[static_cast<std::size_t>(h)]) {
      triplets.emplace_back(row, j, level);
    }
    triplets.emplace_back(row, peak, -1.0);
    triplets.emplace_back(row, peak + 1 + h, 1.0);
  }
  const int n_vars = n_flow + 1 + h_slots;
  const int n_rows = instance.size() + h_slots;

  QpProblem qp;
  qp.linear = Eigen::VectorXd::Zero(n_vars);
  qp.linear[peak] = 1.0;
  qp.diagonal = Eigen::VectorXd::Zero(n_vars);
  qp.nonnegative.assign(static_cast<std::size_t>(n_vars), true);
  qp.constraints.resize(n_rows, n_vars);
  qp.constraints.setFromTriplets(triplets.begin(), triplets.end());
  qp.rhs = Eigen::VectorXd::Zero(n_rows);
  qp.rhs.head(instance.size()).setOnes();

  return finish(instance, ObjectiveKind::Par, vars, backend.solve(qp, settings));
}

RelaxedSolution solve_relaxed(const ProblemInstance& instance, ObjectiveKind kind,
                              const DropSet& dropped, const SolverSettings& settings,
                              const QpBackend& backend) {
  return kind == ObjectiveKind::Cost ? solve_relaxed_cost(instance, dropped, settings, backend)
                                     : solve_relaxed_par(instance, dropped, settings, backend);
}

}  // namespace atomsched
