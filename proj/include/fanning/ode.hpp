#pragma once

#include <functional>

#include <Eigen/Dense>

namespace fanning {

using Matrix = Eigen::MatrixXd;

/// Step control for the embedded Dormand-Prince 5(4) integrator.
struct IntegratorSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  double min_step = 1e-13;  // relative to max(1, |t|); below this the step has underflowed
  long max_steps = 1'000'000;
};

/// Right-hand side of a matrix ODE: writes dY/dt at (t, Y) into `dydt`.
using MatrixOdeRhs = std::function<void(double t, const Matrix& y, Matrix& dydt)>;

/// Advances `y` from t0 to t1 (either direction). Throws IntegrationError on
/// step underflow or when max_steps is exhausted.
Matrix integrate_matrix_ode(const MatrixOdeRhs& rhs, Matrix y, double t0, double t1,
                            const IntegratorSettings& settings = {});

}  // namespace fanning
