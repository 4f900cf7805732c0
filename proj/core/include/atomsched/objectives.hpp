#ifndef ATOMSCHED_OBJECTIVES_HPP
#define ATOMSCHED_OBJECTIVES_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "atomsched/core_model.hpp"
#include "atomsched/flow.hpp"

namespace atomsched {

enum class ObjectiveKind { Cost, Par };

std::string_view to_string(ObjectiveKind kind) noexcept;
// Accepts "cost" or "par"; throws ValidationError otherwise.
ObjectiveKind parse_objective(std::string_view text);

// Quadratic hourly tariff C_h(L) = a_h L^2, a_h in cent/kWh^2.
class CostModel {
 public:
  explicit CostModel(std::vector<double> coefficients);
  explicit CostModel(const ProblemInstance& instance);

  std::span<const double> coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<double> coefficients_;
};

// Sum_h a_h L_h^2 in cents.
double energy_cost(std::span<const double> loads, const CostModel& model);

double peak_load(std::span<const double> loads);

// H * max_h L_h / total_energy.
double par(std::span<const double> loads, double total_energy, const Horizon& horizon);

// Boolean objective of a schedule: cents for Cost, the ratio for Par.
double schedule_objective(const ProblemInstance& instance, ObjectiveKind kind,
                          const Schedule& schedule);

// d/df(n,s) of Sum_h a_h L_h(f)^2, an N x H matrix. Entries for s outside the
// start set follow the same formula; the solver never reads them.
Eigen::MatrixXd cost_gradient(const ProblemInstance& instance, const FlowConfiguration& flows);
Eigen::MatrixXd cost_gradient(const ProblemInstance& instance, std::span<const double> loads);

// (N*H) x (N*H) Hessian of the cost; row/column index n*H + s. Independent of
// the flows since the cost is quadratic in them.
Eigen::MatrixXd cost_hessian(const ProblemInstance& instance);

}  // namespace atomsched

#endif  // ATOMSCHED_OBJECTIVES_HPP
