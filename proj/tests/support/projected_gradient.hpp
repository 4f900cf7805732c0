#ifndef ATOMSCHED_PROJECTED_GRADIENT_HPP
#define ATOMSCHED_PROJECTED_GRADIENT_HPP

// Reference solver for the relaxed cost problem: accelerated projected
// gradient over the product of per-user simplices. Slow but shares no code
// with the interior-point path.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "test_support.hpp"

namespace atomsched::testing {

// Euclidean projection of v onto {x >= 0, sum x = 1}.
inline std::vector<double> project_to_simplex(std::vector<double> v) {
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) shift = candidate;
  }
  for (double& x : v) x = std::max(0.0, x - shift);
  return v;
}

struct ReferenceOptimum {
  Eigen::MatrixXd flows;
  double cost = 0.0;
};

// `allowed(n, s)` selects the variables; everything else is pinned to zero.
inline ReferenceOptimum reference_relaxed_cost(const ProblemInstance& instance,
                                               const std::function<bool(int, int)>& allowed,
                                               int iterations = 20000) {
  const int users = instance.size();
  const int slots = instance.slots();
  std::vector<std::vector<int>> vars(static_cast<std::size_t>(users));
  for (int n = 0; n < users; ++n) {
    for (int s : instance.starts(n).starts) {
      if (allowed(n, s)) vars[static_cast<std::size_t>(n)].push_back(s);
    }
  }

  // Step 1/L with L the largest eigenvalue of 2 G^T diag(a) G restricted to
  // the allowed variables, G holding each variable's unit placement.
  const auto coeffs = instance.cost_coefficients();
  std::vector<std::pair<int, int>> columns;
  for (int n = 0; n < users; ++n) {
    for (int s : vars[static_cast<std::size_t>(n)]) columns.emplace_back(n, s);
  }
  Eigen::MatrixXd placement = Eigen::MatrixXd::Zero(slots, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto [n, s] = columns[j];
    const Appliance& a = instance.appliance(n);
    for (int k = 0; k < a.delta; ++k) {
      placement((s + k) % slots, static_cast<Eigen::Index>(j)) = a.gamma_op[static_cast<std::size_t>(k)];
    }
  }
  Eigen::VectorXd weights(slots);
  for (int h = 0; h < slots; ++h) weights[h] = coeffs[h];
  const Eigen::MatrixXd hessian = 2.0 * placement.transpose() * weights.asDiagonal() * placement;
  const double lipschitz =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hessian, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
  const double step = 1.0 / std::max(lipschitz, 1e-12);

  auto gradient = [&](const Eigen::MatrixXd& f) {
    const auto loads = naive_loads(instance, f);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(users, slots);
    for (int n = 0; n < users; ++n) {
      const Appliance& a = instance.appliance(n);
      for (int s : vars[static_cast<std::size_t>(n)]) {
        for (int k = 0; k < a.delta; ++k) {
          const int h = (s + k) % slots;
          g(n, s) += 2.0 * coeffs[h] * a.gamma_op[k] * loads[static_cast<std::size_t>(h)];
        }
      }
    }
    return g;
  };
  auto project = [&](Eigen::MatrixXd f) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(users, slots);
    for (int n = 0; n < users; ++n) {
      const auto& vs = vars[static_cast<std::size_t>(n)];
      std::vector<double> row;
      for (int s : vs) row.push_back(f(n, s));
      row = project_to_simplex(row);
      for (std::size_t k = 0; k < vs.size(); ++k) out(n, vs[k]) = row[k];
    }
    return out;
  };

  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(users, slots);
  for (int n = 0; n < users; ++n) {
    const auto& vs = vars[static_cast<std::size_t>(n)];
    for (int s : vs) x(n, s) = 1.0 / static_cast<double>(vs.size());
  }
  Eigen::MatrixXd y = x;
  double t = 1.0;
  for (int it = 0; it < iterations; ++it) {
    const Eigen::MatrixXd next = project(y - step * gradient(y));
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / t_next) * (next - x);
    x = next;
    t = t_next;
  }
  return {x, naive_cost(instance, x)};
}

}  // namespace atomsched::testing

#endif  // ATOMSCHED_PROJECTED_GRADIENT_HPP
