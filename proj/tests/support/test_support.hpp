#ifndef ATOMSCHED_TEST_SUPPORT_HPP
#define ATOMSCHED_TEST_SUPPORT_HPP

// Shared fixtures for the test suites. The evaluators here deliberately avoid
// the library's placement helpers and recompute everything from the raw
// double sum over (user, start, slot).

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <atomsched/catalog.hpp>
#include <atomsched/core_model.hpp>
#include <atomsched/flow.hpp>

namespace atomsched::testing {

inline Appliance catalog_appliance(const std::string& key) {
  auto found = ApplianceCatalog::defaults().find(key);
  if (!found) throw std::runtime_error("missing catalog key " + key);
  return *found;
}

inline Appliance constant_appliance(std::string name, int alpha, int beta, int delta, double level) {
  return Appliance{std::move(name), alpha, beta, delta,
                   std::vector<double>(static_cast<std::size_t>(delta), level)};
}

inline ProblemInstance make_instance(std::vector<Appliance> appliances, int slots = 24) {
  Horizon horizon(slots);
  auto coeffs = default_cost_coefficients(horizon);
  return ProblemInstance(horizon, std::move(appliances), std::move(coeffs));
}

// Start slots of a window listed by brute force: every i in [alpha, beta]
// whose delta consecutive slots stay inside the window.
inline std::vector<int> naive_starts(const Appliance& a, int slots) {
  std::vector<int> out;
  for (int i = a.alpha; i <= a.beta; ++i) {
    if (i + a.delta - 1 <= a.beta) out.push_back(i % slots);
  }
  return out;
}

// L_h = sum_n sum_s f(n,s) * gamma_n((h - s) mod H), the pattern being zero
// outside its delta offsets.
inline std::vector<double> naive_loads(const ProblemInstance& instance, const Eigen::MatrixXd& f) {
  const int slots = instance.slots();
  std::vector<double> loads(static_cast<std::size_t>(slots), 0.0);
  for (int n = 0; n < instance.size(); ++n) {
    const Appliance& a = instance.appliance(n);
    for (int s = 0; s < slots; ++s) {
      if (f(n, s) == 0.0) continue;
      for (int h = 0; h < slots; ++h) {
        const int offset = ((h - s) % slots + slots) % slots;
        if (offset < a.delta) loads[static_cast<std::size_t>(h)] += f(n, s) * a.gamma_op[offset];
      }
    }
  }
  return loads;
}

inline double naive_cost(const ProblemInstance& instance, const Eigen::MatrixXd& f) {
  const auto loads = naive_loads(instance, f);
  double total = 0.0;
  for (int h = 0; h < instance.slots(); ++h) {
    total += instance.cost_coefficients()[h] * loads[static_cast<std::size_t>(h)] *
             loads[static_cast<std::size_t>(h)];
  }
  return total;
}

inline double naive_cost_of(const ProblemInstance& instance, const std::vector<int>& starts) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(instance.size(), instance.slots());
  for (int n = 0; n < instance.size(); ++n) f(n, starts[static_cast<std::size_t>(n)]) = 1.0;
  return naive_cost(instance, f);
}

inline double naive_par_of(const ProblemInstance& instance, const std::vector<int>& starts) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(instance.size(), instance.slots());
  for (int n = 0; n < instance.size(); ++n) f(n, starts[static_cast<std::size_t>(n)]) = 1.0;
  const auto loads = naive_loads(instance, f);
  double energy = 0.0;
  for (const auto& a : instance.appliances()) {
    for (double g : a.gamma_op) energy += g;
  }
  return instance.slots() * *std::max_element(loads.begin(), loads.end()) / energy;
}

// Random valid appliance, including windows that wrap past midnight.
inline Appliance random_appliance(std::mt19937_64& rng, int slots, int max_delta = 4) {
  std::uniform_int_distribution<int> alpha_dist(0, slots - 1);
  std::uniform_int_distribution<int> delta_dist(1, std::min(max_delta, slots - 1));
  std::uniform_real_distribution<double> level(0.1, 3.5);
  Appliance a;
  a.alpha = alpha_dist(rng);
  a.delta = delta_dist(rng);
  std::uniform_int_distribution<int> width(std::max(1, a.delta - 1), slots - 1);
  a.beta = a.alpha + width(rng);
  a.name = "r" + std::to_string(a.alpha) + "_" + std::to_string(a.beta);
  for (int k = 0; k < a.delta; ++k) a.gamma_op.push_back(level(rng));
  return a;
}

inline ProblemInstance random_instance(std::mt19937_64& rng, int users, int slots = 24,
                                       int max_delta = 4) {
  std::vector<Appliance> list;
  for (int n = 0; n < users; ++n) list.push_back(random_appliance(rng, slots, max_delta));
  Horizon horizon(slots);
  std::uniform_real_distribution<double> coeff(0.05, 0.5);
  std::vector<double> a(static_cast<std::size_t>(slots));
  for (double& v : a) v = coeff(rng);
  return ProblemInstance(horizon, std::move(list), std::move(a));
}

// Relaxed-feasible flows: random simplex weights on each user's start set,
// with a few rows pushed towards a corner so boundary cases appear.
inline Eigen::MatrixXd random_flows(const ProblemInstance& instance, std::mt19937_64& rng) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(instance.size(), instance.slots());
  std::exponential_distribution<double> weight(1.0);
  std::bernoulli_distribution sparse(0.2);
  for (int n = 0; n < instance.size(); ++n) {
    const auto& starts = instance.starts(n).starts;
    double sum = 0.0;
    for (int s : starts) {
      const double w = sparse(rng) ? 0.0 : weight(rng);
      f(n, s) = w;
      sum += w;
    }
    if (sum == 0.0) {
      f(n, starts.front()) = sum = 1.0;
    }
    for (int s : starts) f(n, s) /= sum;
  }
  return f;
}

inline std::vector<int> random_schedule(const ProblemInstance& instance, std::mt19937_64& rng) {
  std::vector<int> out;
  for (int n = 0; n < instance.size(); ++n) {
    const auto& starts = instance.starts(n).starts;
    std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
    out.push_back(starts[pick(rng)]);
  }
  return out;
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace atomsched::testing

#endif  // ATOMSCHED_TEST_SUPPORT_HPP
