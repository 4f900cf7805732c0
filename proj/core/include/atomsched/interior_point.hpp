#ifndef ATOMSCHED_INTERIOR_POINT_HPP
#define ATOMSCHED_INTERIOR_POINT_HPP

// Convex QP backend.
//
//   minimize    c'x + 1/2 sum_i q_i x_i^2
//   subject to  A x = b,  x_i >= 0 for i in the nonnegative set, others free.
//
// Free variables need q_i > 0. Both relaxations reduce to this form: the cost
// QP carries one free load variable per slot, the PAR LP carries the peak
// variable and one slack per slot.

#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace atomsched {

enum class SolverStatus { Optimal, Infeasible, NumericalFailure };

std::string_view to_string(SolverStatus status) noexcept;

struct SolverSettings {
  double tolerance = 1e-8;
  int max_solver_iterations = 200;
};

struct QpProblem {
  Eigen::VectorXd linear;                      // c
  Eigen::VectorXd diagonal;                    // q, q_i >= 0
  std::vector<bool> nonnegative;               // bound type per variable
  Eigen::SparseMatrix<double> constraints;     // A, m x n, full row rank
  Eigen::VectorXd rhs;                         // b

  Eigen::Index variables() const noexcept { return linear.size(); }
  Eigen::Index rows() const noexcept { return rhs.size(); }
};

struct QpSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd y;  // equality multipliers
  Eigen::VectorXd z;  // bound multipliers, zero on free variables
  SolverStatus status = SolverStatus::NumericalFailure;
  int iterations = 0;
  double objective = 0.0;
};

class QpBackend {
 public:
  virtual ~QpBackend() = default;
  virtual QpSolution solve(const QpProblem& problem, const SolverSettings& settings) const = 0;
};

// Mehrotra predictor-corrector primal-dual interior-point method. Each
// iteration factors the dense m x m normal matrix A M^-1 A' where
// M = diag(q) + X^-1 Z, so the cost per iteration is O(nnz(A) * k + m^3)
// with k the largest column count.
class InteriorPointBackend final : public QpBackend {
 public:
  QpSolution solve(const QpProblem& problem, const SolverSettings& settings) const override;
};

const QpBackend& default_backend();

}  // namespace atomsched

#endif  // ATOMSCHED_INTERIOR_POINT_HPP
