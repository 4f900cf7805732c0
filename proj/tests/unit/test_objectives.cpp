#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <atomsched/errors.hpp>
#include <atomsched/objectives.hpp>

#include "test_support.hpp"

using namespace atomsched;
using namespace atomsched::testing;

namespace {

double cost_of(const ProblemInstance& instance, const Schedule& schedule) {
  return energy_cost(load_profile_from_schedule(instance, schedule), CostModel(instance));
}

}  // namespace

TEST_CASE("energy cost") {
  const auto dish = make_instance({catalog_appliance("dish_washer")});
  CHECK(cost_of(dish, Schedule{{3}}) == doctest::Approx(0.20736).epsilon(1e-12));
  CHECK(energy_cost(std::vector<double>(24, 0.0), CostModel(dish)) == 0.0);

  const auto phev = make_instance({catalog_appliance("phev")});
  CHECK(cost_of(phev, Schedule{{22}}) == doctest::Approx(2 * 0.3 * 3.3 * 3.3 + 0.2 * 3.3 * 3.3).epsilon(1e-12));
  CHECK(cost_of(phev, Schedule{{22}}) == doctest::Approx(8.712).epsilon(1e-12));

  CHECK_THROWS_AS(energy_cost(std::vector<double>(23, 0.0), CostModel(dish)), ValidationError);
  CHECK_THROWS_AS(CostModel(std::vector<double>{0.1, -0.2}), ValidationError);
}

TEST_CASE("peak-to-average ratio") {
  const Horizon day;
  const auto dish = make_instance({catalog_appliance("dish_washer")});
  for (int s : {0, 7, 22}) {
    CHECK(par(load_profile_from_schedule(dish, Schedule{{s}}), 1.44, day) == doctest::Approx(12.0));
  }
  CHECK(par(std::vector<double>(24, 0.4), 24 * 0.4, day) == doctest::Approx(1.0));

  const auto pair = make_instance({constant_appliance("user 1", 0, 5, 2, 1.0),
                                   constant_appliance("user 2", 9, 14, 3, 1.0)});
  CHECK(schedule_objective(pair, ObjectiveKind::Par, Schedule{{0, 9}}) == doctest::Approx(4.8));
  CHECK_THROWS_AS(par(std::vector<double>(24, 0.0), 0.0, day), ValidationError);
}

TEST_CASE("objective names") {
  CHECK(parse_objective("cost") == ObjectiveKind::Cost);
  CHECK(parse_objective("par") == ObjectiveKind::Par);
  CHECK(to_string(ObjectiveKind::Par) == "par");
  CHECK_THROWS_AS(parse_objective("peak"), ValidationError);
}

TEST_CASE("cost gradient") {
  const auto dish = make_instance({catalog_appliance("dish_washer")});
  CHECK(cost_gradient(dish, std::vector<double>(24, 0.0)).isZero(0.0));

  const auto grad = cost_gradient(dish, schedule_to_flows(dish, Schedule{{3}}));
  CHECK(grad(0, 3) == doctest::Approx(2 * (0.2 * 0.72 * 0.72 + 0.2 * 0.72 * 0.72)).epsilon(1e-12));
  CHECK(grad(0, 3) == doctest::Approx(0.41472).epsilon(1e-12));
}

TEST_CASE("cost hessian entries") {
  const auto dish = make_instance({catalog_appliance("dish_washer")});
  const auto hess = cost_hessian(dish);
  REQUIRE(hess.rows() == 24);
  CHECK(hess(3, 3) == doctest::Approx(2 * 0.72 * 0.72 * 0.4).epsilon(1e-12));
  CHECK(hess(3, 3) == doctest::Approx(0.41472).epsilon(1e-12));

  const auto pair = make_instance({constant_appliance("user 1", 0, 5, 2, 1.0),
                                   constant_appliance("user 2", 9, 14, 3, 1.0)});
  const auto h2 = cost_hessian(pair);
  CHECK(h2(0 * 24 + 0, 1 * 24 + 9) == 0.0);   // ranges {0,1} and {9,10,11}
  CHECK(h2(0 * 24 + 3, 1 * 24 + 2) != 0.0);   // ranges {3,4} and {2,3,4}
}

TEST_CASE("property: gradient matches central differences of the raw cost") {
  std::mt19937_64 rng(21);
  constexpr double step = 1e-5;
  for (int trial = 0; trial < 30; ++trial) {
    const auto instance = random_instance(rng, std::uniform_int_distribution<int>(1, 4)(rng));
    const Eigen::MatrixXd f = random_flows(instance, rng);
    const auto grad = cost_gradient(instance, FlowConfiguration{f});
    for (int n = 0; n < instance.size(); ++n) {
      for (int s = 0; s < instance.slots(); ++s) {
        Eigen::MatrixXd up = f, down = f;
        up(n, s) += step;
        down(n, s) -= step;
        const double fd = (naive_cost(instance, up) - naive_cost(instance, down)) / (2 * step);
        CHECK(std::abs(grad(n, s) - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST_CASE("property: hessian is symmetric, PSD and the jacobian of the gradient") {
  std::mt19937_64 rng(22);
  constexpr double step = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const auto instance = random_instance(rng, std::uniform_int_distribution<int>(1, 3)(rng));
    const int h_slots = instance.slots();
    const Eigen::MatrixXd hess = cost_hessian(instance);
    CHECK((hess - hess.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hess, Eigen::EigenvaluesOnly);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-9);

    // The gradient is affine in f, so its finite-difference Jacobian must
    // reproduce the same matrix at any base point.
    for (int point = 0; point < 2; ++point) {
      const Eigen::MatrixXd f = random_flows(instance, rng);
      for (int n = 0; n < instance.size(); ++n) {
        for (int s = 0; s < h_slots; ++s) {
          Eigen::MatrixXd up = f, down = f;
          up(n, s) += step;
          down(n, s) -= step;
          const Eigen::MatrixXd column = (cost_gradient(instance, naive_loads(instance, up)) -
                                          cost_gradient(instance, naive_loads(instance, down))) /
                                         (2 * step);
          for (int m = 0; m < instance.size(); ++m) {
            for (int t = 0; t < h_slots; ++t) {
              const double exact = hess(m * h_slots + t, n * h_slots + s);
              CHECK(std::abs(column(m, t) - exact) <= 1e-4 * std::max(1.0, std::abs(exact)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("property: cost is convex along segments of feasible flows") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto instance = random_instance(rng, 3);
    const CostModel model(instance);
    const Eigen::MatrixXd f = random_flows(instance, rng);
    const Eigen::MatrixXd g = random_flows(instance, rng);
    const double lambda = unit(rng);
    auto cost = [&](const Eigen::MatrixXd& x) {
      return energy_cost(load_profile(instance, FlowConfiguration{x}), model);
    };
    CHECK(cost(lambda * f + (1 - lambda) * g) <= lambda * cost(f) + (1 - lambda) * cost(g) + 1e-9);
  }
}

TEST_CASE("property: PAR is invariant under user permutation and rotation") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto instance = random_instance(rng, 4);
    const auto starts = random_schedule(instance, rng);
    const double base = schedule_objective(instance, ObjectiveKind::Par, Schedule{starts});
    CHECK(base == doctest::Approx(naive_par_of(instance, starts)));

    std::vector<Appliance> reversed(instance.appliances().rbegin(), instance.appliances().rend());
    std::vector<int> reversed_starts(starts.rbegin(), starts.rend());
    const ProblemInstance permuted(instance.horizon(), reversed,
                                   std::vector<double>(instance.cost_coefficients().begin(),
                                                       instance.cost_coefficients().end()));
    CHECK(schedule_objective(permuted, ObjectiveKind::Par, Schedule{reversed_starts}) ==
          doctest::Approx(base));

    const int offset = std::uniform_int_distribution<int>(1, 23)(rng);
    std::vector<Appliance> rotated;
    std::vector<int> rotated_starts;
    for (int n = 0; n < instance.size(); ++n) {
      Appliance a = instance.appliance(n);
      const int width = a.beta - a.alpha;
      a.alpha = (a.alpha + offset) % 24;
      a.beta = a.alpha + width;
      rotated.push_back(a);
      rotated_starts.push_back((starts[static_cast<std::size_t>(n)] + offset) % 24);
    }
    const auto turned = make_instance(rotated);
    CHECK(schedule_objective(turned, ObjectiveKind::Par, Schedule{rotated_starts}) ==
          doctest::Approx(base));
  }
}
