#include "atomsched/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "atomsched/errors.hpp"

namespace atomsched {

Horizon::Horizon(int slots) : slots_(slots) {
  if (slots < 2) {
    throw ValidationError(fmt::format("horizon must have at least 2 slots, got {}", slots));
  }
}

void validate(const Appliance& a, const Horizon& horizon) {
  const int h = horizon.slots();
  auto fail = [&](const std::string& why) {
    throw ValidationError(fmt::format("appliance '{}': {}", a.name, why));
  };
  if (a.alpha < 0 || a.alpha > h - 1) {
    fail(fmt::format("alpha={} outside [0, {}]", a.alpha, h - 1));
  }
  if (a.beta - a.alpha < 1 || a.beta - a.alpha > h - 1) {
    fail(fmt::format("window length beta-alpha={} outside [1, {}]", a.beta - a.alpha, h - 1));
  }
  if (a.delta < 1) {
    fail(fmt::format("delta={} must be positive", a.delta));
  }
  if (a.beta < a.alpha + a.delta - 1) {
    fail(fmt::format("beta >= alpha+delta-1 violated (alpha={}, beta={}, delta={})", a.alpha,
                     a.beta, a.delta));
  }
  if (a.gamma_op.size() != static_cast<std::size_t>(a.delta)) {
    fail(fmt::format("gamma_op has {} levels, expected delta={}", a.gamma_op.size(), a.delta));
  }
  for (std::size_t k = 0; k < a.gamma_op.size(); ++k) {
    if (!(a.gamma_op[k] > 0.0) || !std::isfinite(a.gamma_op[k])) {
      fail(fmt::format("gamma_op[{}]={} must be a positive finite level", k, a.gamma_op[k]));
    }
  }
}

bool StartSet::contains(int slot) const noexcept { return position(slot) >= 0; }

int StartSet::position(int slot) const noexcept {
  auto it = std::find(starts.begin(), starts.end(), slot);
  return it == starts.end() ? -1 : static_cast<int>(it - starts.begin());
}

double total_daily_energy(const Appliance& appliance) {
  return std::accumulate(appliance.gamma_op.begin(), appliance.gamma_op.end(), 0.0);
}

StartSet feasible_starts(const Appliance& appliance, const Horizon& horizon) {
  StartSet set;
  set.first_index = appliance.alpha;
  for (int i = appliance.alpha; i <= appliance.beta - appliance.delta + 1; ++i) {
    set.starts.push_back(horizon.wrap(i));
  }
  return set;
}

std::vector<int> operation_range(int start, int delta, const Horizon& horizon) {
  if (start < 0 || start >= horizon.slots()) {
    throw ValidationError(fmt::format("start slot {} outside [0, {}]", start, horizon.slots() - 1));
  }
  if (delta < 1 || delta > horizon.slots()) {
    throw ValidationError(
        fmt::format("operation length {} outside [1, {}]", delta, horizon.slots()));
  }
  std::vector<int> range(static_cast<std::size_t>(delta));
  for (int k = 0; k < delta; ++k) range[static_cast<std::size_t>(k)] = horizon.wrap(start + k);
  return range;
}

ProblemInstance::ProblemInstance(Horizon horizon, std::vector<Appliance> appliances,
                                 std::vector<double> cost_coefficients)
    : horizon_(horizon),
      appliances_(std::move(appliances)),
      cost_coefficients_(std::move(cost_coefficients)) {
  if (appliances_.empty()) throw ValidationError("instance needs at least one appliance");
  if (cost_coefficients_.size() != static_cast<std::size_t>(horizon_.slots())) {
    throw ValidationError(fmt::format("expected {} cost coefficients, got {}", horizon_.slots(),
                                      cost_coefficients_.size()));
  }
  for (std::size_t h = 0; h < cost_coefficients_.size(); ++h) {
    const double a = cost_coefficients_[h];
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw ValidationError(fmt::format("cost coefficient a[{}]={} must be nonnegative", h, a));
    }
  }
  start_sets_.reserve(appliances_.size());
  for (const Appliance& a : appliances_) {
    validate(a, horizon_);
    start_sets_.push_back(feasible_starts(a, horizon_));
    total_energy_ += total_daily_energy(a);
  }
}

std::size_t ProblemInstance::total_start_count() const noexcept {
  std::size_t total = 0;
  for (const StartSet& s : start_sets_) total += s.size();
  return total;
}

std::vector<double> default_cost_coefficients(const Horizon& horizon) {
  const int h = horizon.slots();
  std::vector<double> a(static_cast<std::size_t>(h));
  for (int k = 0; k < h; ++k) {
    // slot k begins at hour 24k/H; night tier covers hours [0, 8)
    a[static_cast<std::size_t>(k)] = (24LL * k < 8LL * h) ? 0.2 : 0.3;
  }
  return a;
}

BigInt enumeration_size(const ProblemInstance& instance) {
  BigInt size = 1;
  for (int n = 0; n < instance.size(); ++n) size *= instance.starts(n).size();
  return size;
}

}  // namespace atomsched
