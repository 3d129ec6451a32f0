#include "fanning/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "fanning/errors.hpp"

namespace fanning {

namespace odeint = boost::numeric::odeint;

Matrix integrate_matrix_ode(const MatrixOdeRhs& rhs, Matrix y, double t0, double t1,
                            const IntegratorSettings& settings) {
  if (t0 == t1) return y;
  const Eigen::Index rows = y.rows();
  const Eigen::Index cols = y.cols();
  using State = std::vector<double>;

  State x(y.data(), y.data() + y.size());
  Matrix ybuf(rows, cols);
  Matrix dybuf(rows, cols);
  auto system = [&](const State& s, State& ds, double t) {
    ybuf = Eigen::Map<const Matrix>(s.data(), rows, cols);
    rhs(t, ybuf, dybuf);
    ds.assign(dybuf.data(), dybuf.data() + dybuf.size());
  };

  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(settings.abs_tol,
                                                                            settings.rel_tol);
  const double direction = t1 > t0 ? 1.0 : -1.0;
  double t = t0;
  double dt = direction * std::min(settings.initial_step, std::abs(t1 - t0));
  long steps = 0;
  while (direction * (t1 - t) > 0.0) {
    if (++steps > settings.max_steps) {
      std::ostringstream os;
      os << "integrator exceeded " << settings.max_steps << " steps before reaching t=" << t1;
      throw IntegrationError(os.str());
    }
    if (direction * (t + dt - t1) > 0.0) dt = t1 - t;
    const auto result = stepper.try_step(system, x, t, dt);
    if (result == odeint::fail) {
      if (std::abs(dt) < settings.min_step * std::max(1.0, std::abs(t))) {
        std::ostringstream os;
        os << "integrator step underflow at t=" << t << " (dt=" << dt << ")";
        throw IntegrationError(os.str());
      }
    }
    if (!std::isfinite(x.front())) throw IntegrationError("integrator produced non-finite state");
  }
  return Eigen::Map<const Matrix>(x.data(), rows, cols);
}

}  // namespace fanning
