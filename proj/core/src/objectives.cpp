#include "atomsched/objectives.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include <fmt/format.h>

#include "atomsched/errors.hpp"

namespace atomsched {

std::string_view to_string(ObjectiveKind kind) noexcept {
  return kind == ObjectiveKind::Cost ? "cost" : "par";
}

ObjectiveKind parse_objective(std::string_view text) {
  if (text == "cost") return ObjectiveKind::Cost;
  if (text == "par") return ObjectiveKind::Par;
  throw ValidationError(fmt::format("unknown objective '{}' (expected cost or par)", text));
}

CostModel::CostModel(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  for (std::size_t h = 0; h < coefficients_.size(); ++h) {
    if (!(coefficients_[h] >= 0.0) || !std::isfinite(coefficients_[h])) {
      throw ValidationError(fmt::format("cost coefficient a[{}]={} must be nonnegative", h,
                                        coefficients_[h]));
    }
  }
}

CostModel::CostModel(const ProblemInstance& instance)
    : coefficients_(instance.cost_coefficients().begin(), instance.cost_coefficients().end()) {}

double energy_cost(std::span<const double> loads, const CostModel& model) {
  const auto a = model.coefficients();
  if (loads.size() != a.size()) {
    throw ValidationError(
        fmt::format("load profile has {} slots but tariff has {}", loads.size(), a.size()));
  }
  double cost = 0.0;
  for (std::size_t h = 0; h < loads.size(); ++h) cost += a[h] * loads[h] * loads[h];
  return cost;
}

double peak_load(std::span<const double> loads) {
  return loads.empty() ? 0.0 : *std::max_element(loads.begin(), loads.end());
}

double par(std::span<const double> loads, double total_energy, const Horizon& horizon) {
  if (!(total_energy > 0.0)) {
    throw ValidationError("peak-to-average ratio needs positive total energy");
  }
  return horizon.slots() * peak_load(loads) / total_energy;
}

double schedule_objective(const ProblemInstance& instance, ObjectiveKind kind,
                          const Schedule& schedule) {
  const LoadProfile loads = load_profile_from_schedule(instance, schedule);
  if (kind == ObjectiveKind::Cost) return energy_cost(loads, CostModel(instance));
  return par(loads, instance.total_energy(), instance.horizon());
}

namespace {

// Column n*H + s holds the load contributed to every slot by a unit flow on
// (n, s): gamma_n((h - s) mod H) on the operation range, zero elsewhere.
Eigen::MatrixXd unit_placements(const ProblemInstance& instance) {
  const int h_slots = instance.slots();
  const Horizon& horizon = instance.horizon();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(h_slots, instance.size() * h_slots);
  for (int n = 0; n < instance.size(); ++n) {
    const Appliance& a = instance.appliance(n);
    for (int s = 0; s < h_slots; ++s) {
      for (int h : operation_range(s, a.delta, horizon)) {
        const double level = a.level(horizon.wrap(h - s));
        assert(level > 0.0);  // range indicator and pattern support coincide
        g(h, n * h_slots + s) = level;
      }
    }
  }
  return g;
}

}  // namespace

Eigen::MatrixXd cost_gradient(const ProblemInstance& instance, std::span<const double> loads) {
  const int h_slots = instance.slots();
  if (loads.size() != static_cast<std::size_t>(h_slots)) {
    throw ValidationError(fmt::format("load profile has {} slots, expected {}", loads.size(),
                                      h_slots));
  }
  const auto a = instance.cost_coefficients();
  Eigen::MatrixXd grad(instance.size(), h_slots);
  for (int n = 0; n < instance.size(); ++n) {
    const Appliance& app = instance.appliance(n);
    for (int s = 0; s < h_slots; ++s) {
      double sum = 0.0;
      for (int k = 0; k < app.delta; ++k) {
        const auto h = static_cast<std::size_t>(instance.horizon().wrap(s + k));
        sum += a[h] * app.level(k) * loads[h];
      }
      grad(n, s) = 2.0 * sum;
    }
  }
  return grad;
}

Eigen::MatrixXd cost_gradient(const ProblemInstance& instance, const FlowConfiguration& flows) {
  return cost_gradient(instance, load_profile(instance, flows));
}

Eigen::MatrixXd cost_hessian(const ProblemInstance& instance) {
  const Eigen::MatrixXd g = unit_placements(instance);
  const auto a = instance.cost_coefficients();
  const Eigen::Map<const Eigen::VectorXd> weights(a.data(), static_cast<Eigen::Index>(a.size()));
  return 2.0 * g.transpose() * weights.asDiagonal() * g;
}

}  // namespace atomsched
