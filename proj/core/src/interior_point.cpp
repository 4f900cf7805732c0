#include "atomsched/interior_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "atomsched/errors.hpp"

namespace atomsched {

std::string_view to_string(SolverStatus status) noexcept {
  switch (status) {
    case SolverStatus::Optimal:
      return "optimal";
    case SolverStatus::Infeasible:
      return "infeasible";
    case SolverStatus::NumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

namespace {

using Eigen::Index;
using Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

double inf_norm(const VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// Largest step keeping v + step * dv >= 0 on the masked entries (may exceed 1).
double max_step(const VectorXd& v, const VectorXd& dv, const std::vector<bool>& mask) {
  double step = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < v.size(); ++i) {
    if (mask[static_cast<std::size_t>(i)] && dv[i] < 0.0) step = std::min(step, -v[i] / dv[i]);
  }
  return step;
}

class NewtonSystem {
 public:
  NewtonSystem(const SparseMatrix& a, VectorXd m_inverse)
      : a_(a), m_inverse_(std::move(m_inverse)) {}

  bool factor() {
    const Index m = a_.rows();
    Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(m, m);
    for (Index j = 0; j < a_.outerSize(); ++j) {
      const double w = m_inverse_[j];
      for (SparseMatrix::InnerIterator p(a_, j); p; ++p) {
        for (SparseMatrix::InnerIterator q(a_, j); q; ++q) {
          if (q.row() <= p.row()) normal(p.row(), q.row()) += w * p.value() * q.value();
        }
      }
    }
    normal = normal.selfadjointView<Eigen::Lower>();
    const double scale = std::max(1.0, normal.diagonal().cwiseAbs().maxCoeff());
    double shift = 0.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
      if (shift > 0.0) normal.diagonal().array() += shift;
      llt_.compute(normal);
      if (llt_.info() == Eigen::Success) return true;
      shift = (shift == 0.0 ? 1e-14 : shift * 100.0) * scale;
    }
    return false;
  }

  // Solves for (dx, dy) given r1 = M dx - A' dy and A dx = -rp.
  void solve(const VectorXd& r1, const VectorXd& rp, VectorXd& dx, VectorXd& dy) const {
    const VectorXd m_r1 = m_inverse_.cwiseProduct(r1);
    dy = llt_.solve(-rp - a_ * m_r1);
    dx = m_inverse_.cwiseProduct(r1 + a_.transpose() * dy);
  }

 private:
  const SparseMatrix& a_;
  VectorXd m_inverse_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

}  // namespace

QpSolution InteriorPointBackend::solve(const QpProblem& problem,
                                       const SolverSettings& settings) const {
  const Index n = problem.variables();
  const Index m = problem.rows();
  const auto& bounded = problem.nonnegative;
  const SparseMatrix& a = problem.constraints;
  const VectorXd& c = problem.linear;
  const VectorXd& q = problem.diagonal;
  const VectorXd& b = problem.rhs;

  if (a.rows() != m || a.cols() != n || q.size() != n ||
      bounded.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("QP dimensions are inconsistent");
  }

  if (!(settings.tolerance > 0.0) || settings.max_solver_iterations < 1) {
    throw ValidationError("solver tolerance must be positive and the iteration cap at least 1");
  }

  Index bounded_count = 0;
  for (Index i = 0; i < n; ++i) {
    if (bounded[static_cast<std::size_t>(i)]) {
      ++bounded_count;
    } else if (!(q[i] > 0.0)) {
      throw ValidationError("free QP variables need a positive quadratic weight");
    }
  }
  const bool pure_lp = q.isZero(0.0);

  VectorXd x = VectorXd::Zero(n);
  VectorXd z = VectorXd::Zero(n);
  VectorXd y = VectorXd::Zero(m);
  for (Index i = 0; i < n; ++i) {
    if (bounded[static_cast<std::size_t>(i)]) x[i] = z[i] = 1.0;
  }

  const double b_scale = 1.0 + inf_norm(b);
  const double c_scale = 1.0 + inf_norm(c);

  // Once converged, a few extra iterations are cheap and usually shrink the
  // gap by orders of magnitude, which keeps large objectives accurate in
  // absolute terms. The best converged iterate is kept.
  constexpr int kPolishIterations = 4;
  int polish_left = -1;
  double best_gap = std::numeric_limits<double>::infinity();
  QpSolution best;

  QpSolution out;
  out.status = SolverStatus::NumericalFailure;
  for (int iter = 0; iter <= settings.max_solver_iterations; ++iter) {
    const VectorXd rp = a * x - b;
    const VectorXd rd = c + q.cwiseProduct(x) - a.transpose() * y - z;
    const double gap = x.dot(z);
    const double mu = bounded_count > 0 ? gap / static_cast<double>(bounded_count) : 0.0;
    const double primal_obj = c.dot(x) + 0.5 * x.dot(q.cwiseProduct(x));

    out.iterations = iter;
    if (!std::isfinite(primal_obj) || !std::isfinite(gap)) break;
    const bool converged = inf_norm(rp) <= settings.tolerance * b_scale &&
                           inf_norm(rd) <= settings.tolerance * c_scale &&
                           gap <= settings.tolerance * (1.0 + std::abs(primal_obj));
    if (converged && gap < best_gap) {
      best_gap = gap;
      best.x = x;
      best.y = y;
      best.z = z;
      best.iterations = iter;
      if (polish_left < 0) polish_left = kPolishIterations;
    } else if (polish_left >= 0) {
      break;
    }
    if (polish_left == 0 || (polish_left > 0 && gap == 0.0)) break;
    if (polish_left > 0) --polish_left;
    if (iter == settings.max_solver_iterations) break;

    VectorXd m_inverse(n);
    for (Index i = 0; i < n; ++i) {
      const double d = bounded[static_cast<std::size_t>(i)] ? z[i] / x[i] : 0.0;
      m_inverse[i] = 1.0 / (q[i] + d);
    }
    NewtonSystem newton(a, std::move(m_inverse));
    if (!newton.factor()) break;

    // r1 = -rd - X^-1 rc on bounded variables, -rd on free ones.
    auto direction = [&](const VectorXd& rc, VectorXd& dx, VectorXd& dy, VectorXd& dz) {
      VectorXd r1 = -rd;
      for (Index i = 0; i < n; ++i) {
        if (bounded[static_cast<std::size_t>(i)]) r1[i] -= rc[i] / x[i];
      }
      newton.solve(r1, rp, dx, dy);
      dz = VectorXd::Zero(n);
      for (Index i = 0; i < n; ++i) {
        if (bounded[static_cast<std::size_t>(i)]) dz[i] = -(rc[i] + z[i] * dx[i]) / x[i];
      }
    };

    VectorXd dx, dy, dz;
    direction(x.cwiseProduct(z), dx, dy, dz);
    double step_p = std::min(1.0, max_step(x, dx, bounded));
    double step_d = std::min(1.0, max_step(z, dz, bounded));
    if (!pure_lp) step_p = step_d = std::min(step_p, step_d);

    double sigma = 0.0;
    if (bounded_count > 0 && mu > 0.0) {
      const double mu_aff =
          (x + step_p * dx).dot(z + step_d * dz) / static_cast<double>(bounded_count);
      sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);
    }

    VectorXd rc = x.cwiseProduct(z) + dx.cwiseProduct(dz);
    for (Index i = 0; i < n; ++i) {
      if (bounded[static_cast<std::size_t>(i)]) rc[i] -= sigma * mu;
    }
    direction(rc, dx, dy, dz);
    if (!dx.allFinite() || !dy.allFinite() || !dz.allFinite()) break;

    constexpr double kStepFraction = 0.995;
    step_p = std::min(1.0, kStepFraction * max_step(x, dx, bounded));
    step_d = std::min(1.0, kStepFraction * max_step(z, dz, bounded));

    // A short corrected step can trap the iterates in a cycle on degenerate
    // faces. Retry with a plain centering direction, which is more conservative.
    constexpr double kShortStep = 0.2;
    if (std::min(step_p, step_d) < kShortStep && bounded_count > 0) {
      VectorXd centered = x.cwiseProduct(z);
      const double target = std::max(sigma, 0.5) * mu;
      for (Index i = 0; i < n; ++i) {
        if (bounded[static_cast<std::size_t>(i)]) centered[i] -= target;
      }
      VectorXd cx, cy, cz;
      direction(centered, cx, cy, cz);
      if (cx.allFinite() && cy.allFinite() && cz.allFinite()) {
        const double cp = std::min(1.0, kStepFraction * max_step(x, cx, bounded));
        const double cd = std::min(1.0, kStepFraction * max_step(z, cz, bounded));
        if (std::min(cp, cd) > std::min(step_p, step_d)) {
          dx = std::move(cx);
          dy = std::move(cy);
          dz = std::move(cz);
          step_p = cp;
          step_d = cd;
        }
      }
    }
    if (!pure_lp) step_p = step_d = std::min(step_p, step_d);

    x += step_p * dx;
    y += step_d * dy;
    z += step_d * dz;
  }

  if (polish_left >= 0) {
    best.status = SolverStatus::Optimal;
    best.objective = c.dot(best.x) + 0.5 * best.x.dot(q.cwiseProduct(best.x));
    return best;
  }
  out.objective = c.dot(x) + 0.5 * x.dot(q.cwiseProduct(x));
  out.x = std::move(x);
  out.y = std::move(y);
  out.z = std::move(z);
  return out;
}

const QpBackend& default_backend() {
  static const InteriorPointBackend backend;
  return backend;
}

}  // namespace atomsched
