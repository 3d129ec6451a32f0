#include "fanning/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fanning/errors.hpp"
#include "fanning/linalg.hpp"

namespace fanning {

namespace {

Matrix p1_value(const FrameCurve& curve, double t) {
  return std::visit(
      [&](const auto& c) -> Matrix {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PolynomialFrameCurve>) {
          return ode_coefficients(eval_frame_jet(c, t, c.k())).P(1).value();
        } else {
          return c.coefficients().front()(t);
        }
      },
      curve);
}

Matrix solve(const Matrix& lhs, const Matrix& rhs) { return Eigen::PartialPivLU<Matrix>(lhs).solve(rhs); }

}  // namespace

const MatrixJet& CoefficientSet::invariant(int j) const {
  if (j == 0) {
    if (!kappa) throw Error("CoefficientSet: kappa has not been computed");
    return *kappa;
  }
  return h.at(static_cast<std::size_t>(j - 1));
}

CoefficientSet ode_coefficients(const FrameJet& frame) {
  const int k = frame.k();
  const int n = frame.n();
  frame.require_fanning();
  frame.require_order(k, "ode_coefficients");
  const int order = frame.order() - k;
  const MatrixJet rhs = frame.derivative_jet(k);
  const MatrixJet stacked = -(frame.juxtaposed_inverse().truncated(order) * rhs);

  CoefficientSet out;
  out.k = k;
  out.n = n;
  out.p.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    out.p.push_back(scale(1.0 / binomial(k, i), stacked.block(static_cast<Index>(k - i) * n, 0, n, n)));
  }
  return out;
}

MatrixJet schwarzian(const FrameJet& frame) {
  frame.require_order(frame.k() + 1, "schwarzian");
  const CoefficientSet c = ode_coefficients(frame);
  const MatrixJet& p1 = c.P(1);
  return scale(2.0, c.P(2) - p1 * p1 - derivative(p1));
}

std::vector<MatrixJet> derivative_factors(const MatrixJet& p1, int count) {
  if (count - 1 > p1.order()) throw InsufficientOrderError("derivative_factors", count - 1, p1.order());
  std::vector<MatrixJet> w;
  w.reserve(static_cast<std::size_t>(count + 1));
  w.push_back(MatrixJet::identity(p1.base_time(), p1.rows(), p1.order()));
  for (int m = 0; m < count; ++m) {
    const MatrixJet& wm = w.back();
    if (m == 0) {
      w.push_back(-p1);
    } else {
      w.push_back(derivative(wm) - p1 * wm);
    }
  }
  return w;
}

CoefficientSet wilczynski_invariants(const CoefficientSet& coefficients) {
  const int k = coefficients.k;
  const MatrixJet& p1 = coefficients.P(1);
  if (p1.order() < k - 1) {
    throw InsufficientOrderError("wilczynski_invariants: P_1 jet", k - 1, p1.order());
  }
  const std::vector<MatrixJet> w = derivative_factors(p1, k);

  auto invariant = [&](int j) {
    MatrixJet acc = w[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i) {
      acc = acc + binomial(j, i) * (w[static_cast<std::size_t>(j - i)] * coefficients.P(i));
    }
    return acc;
  };

  CoefficientSet out = coefficients;
  out.kappa = invariant(2);
  out.h.clear();
  for (int j = 3; j <= k; ++j) out.h.push_back(invariant(j));
  return out;
}

CoefficientSet wilczynski_invariants(const FrameJet& frame) {
  frame.require_order(2 * frame.k() - 1, "wilczynski_invariants");
  return wilczynski_invariants(ode_coefficients(frame));
}

double normality_defect(const CoefficientSet& coefficients) {
  const double p2 = coefficients.k >= 2 ? coefficients.P(2).max_abs() : 0.0;
  return coefficients.P(1).max_abs() / (1.0 + p2);
}

double normality_defect(const FrameJet& frame) { return normality_defect(ode_coefficients(frame)); }

bool is_normal(const FrameJet& frame, double tol) { return normality_defect(frame) < tol; }

void require_normal(const FrameJet& frame, double tol) {
  const double defect = normality_defect(frame);
  if (!(defect < tol)) {
    std::ostringstream os;
    os << "frame is not normal at t=" << frame.base_time() << " (|P1| / (1+|P2|) = " << defect
       << ", limit " << tol << ")";
    throw NotNormalError(os.str(), defect);
  }
}

MatrixJet normalizing_factor(const FrameJet& frame, const Matrix& initial) {
  const CoefficientSet c = ode_coefficients(frame);
  const MatrixJet& p1 = c.P(1);
  const int exact = p1.order() + 1;
  std::vector<Matrix> y(static_cast<std::size_t>(frame.order() + 1), Matrix::Zero(frame.n(), frame.n()));
  y[0] = initial;
  for (int m = 0; m + 1 <= exact; ++m) {
    Matrix acc = Matrix::Zero(frame.n(), frame.n());
    for (int i = 0; i <= m; ++i) acc.noalias() += p1.coeff(i) * y[static_cast<std::size_t>(m - i)];
    y[static_cast<std::size_t>(m + 1)] = acc / (m + 1.0);
  }
  return {frame.base_time(), std::move(y)};
}

FrameJet normalize_jet(const FrameJet& frame, const Matrix& initial) {
  return right_act(frame, normalizing_factor(frame, initial));
}

FrameJet normalize_jet(const FrameJet& frame) {
  return normalize_jet(frame, Matrix::Identity(frame.n(), frame.n()));
}

NormalizationRecord normal_frame(const FrameCurve& curve, std::span<const double> grid,
                                 const NormalFrameOptions& options) {
  const int k = curve_k(curve);
  const int n = curve_n(curve);
  const int order = options.jet_order < 0 ? 2 * k + 1 : options.jet_order;
  if (order < 2 * k - 1) throw InsufficientOrderError("normal_frame", 2 * k - 1, order);
  if (grid.empty()) throw ShapeError("normal_frame: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ShapeError("normal_frame: grid must be strictly increasing");
  }

  NormalizationRecord rec;
  rec.k = k;
  rec.n = n;
  rec.times.assign(grid.begin(), grid.end());
  rec.X.resize(grid.size());
  rec.X[0] = Matrix::Identity(n, n);
  auto rhs = [&](double t, const Matrix& x, Matrix& dx) { dx = -(x * p1_value(curve, t)); };
  for (std::size_t i = 1; i < grid.size(); ++i) {
    rec.X[i] = integrate_matrix_ode(rhs, rec.X[i - 1], grid[i - 1], grid[i], options.integrator);
  }

  std::vector<std::optional<FrameJet>> jets(grid.size());
  rec.B.resize(grid.size());
  rec.Q.resize(grid.size());
  kernels::for_each_index(options.execution, grid.size(), [&](std::size_t i) {
    const FrameJet fj = frame_jet(curve, grid[i], order);
    fj.require_fanning();
    const CoefficientSet inv = wilczynski_invariants(fj);
    const Matrix& x = rec.X[i];
    const Eigen::PartialPivLU<Matrix> lu(x);
    const Matrix x_inv = lu.inverse();
    std::vector<Matrix> q;
    for (int j = 2; j <= k; ++j) q.push_back(x * inv.invariant(j - 2).value() * x_inv);
    rec.Q[i] = std::move(q);
    jets[i].emplace(normalize_jet(fj, x_inv));
    rec.B[i] = jets[i]->jet().value();
  });
  rec.normal_jets.reserve(grid.size());
  for (auto& j : jets) rec.normal_jets.push_back(std::move(*j));
  return rec;
}

Matrix fundamental_nilpotent(int k, int n) {
  const Index dim = static_cast<Index>(k) * n;
  Matrix nil = Matrix::Zero(dim, dim);
  for (int j = 1; j < k; ++j) {
    nil.block(static_cast<Index>(j - 1) * n, static_cast<Index>(j) * n, n, n) =
        static_cast<double>(j) * Matrix::Identity(n, n);
  }
  return nil;
}

MatrixJet fundamental_endomorphism(const FrameJet& frame, int jet_order) {
  frame.require_fanning();
  frame.require_order(frame.k() - 1 + jet_order, "fundamental_endomorphism");
  const MatrixJet lift = frame.juxtaposed().truncated(jet_order);
  const MatrixJet lift_inv = frame.juxtaposed_inverse().truncated(jet_order);
  return (lift * fundamental_nilpotent(frame.k(), frame.n())) * lift_inv;
}

MatrixJet horizontal_derivative(const FrameJet& frame) {
  const int k = frame.k();
  frame.require_order(k, "horizontal_derivative");
  const MatrixJet f = fundamental_endomorphism(frame, frame.order() - k);
  return frame.derivative_jet(k - 1) - scale(1.0 / k, f * frame.derivative_jet(k));
}

MatrixJet horizontal_derivative_from_coefficients(const FrameJet& frame) {
  const int k = frame.k();
  const CoefficientSet c = ode_coefficients(frame);
  MatrixJet h = frame.derivative_jet(k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    h = h + binomial(k - 1, i) * (frame.derivative_jet(k - 1 - i) * c.P(i));
  }
  return h;
}

MatrixJet moving_frame(const FrameJet& frame) {
  std::vector<MatrixJet> cols;
  for (int j = 0; j <= frame.k() - 2; ++j) cols.push_back(frame.derivative_jet(j));
  cols.push_back(horizontal_derivative(frame));
  return hstack(cols);
}

EndomorphismBundle endomorphism_bundle(const FrameJet& frame) {
  const int k = frame.k();
  frame.require_fanning();
  frame.require_order(k + 1, "endomorphism_bundle");
  const Index dim = frame.dim();
  const Matrix id = Matrix::Identity(dim, dim);

  MatrixJet f = fundamental_endomorphism(frame, frame.order() - k + 1);
  const Matrix f_dot = f.deriv(1);
  const Matrix f_ddot = f.deriv(2);
  const Matrix d = (2.0 * f_dot - (k - 2.0) * id) / k;
  const Matrix projection = 0.5 * (id - d);
  MatrixJet h = horizontal_derivative(frame);

  const Matrix h_coeff = horizontal_derivative_from_coefficients(frame).value();
  const Matrix h_proj = (id - projection) * frame.derivative_jet(k - 1).value();
  const double residual =
      std::max(max_abs(h.value() - h_coeff), max_abs(h.value() - h_proj));

  Matrix frame_value(dim, dim);
  for (int j = 0; j <= k - 2; ++j) frame_value.middleCols(static_cast<Index>(j) * frame.n(), frame.n()) = frame.derivative_jet(j).value();
  frame_value.rightCols(frame.n()) = h.value();

  return EndomorphismBundle{
      .F = std::move(f),
      .F_dot = f_dot,
      .F_ddot = f_ddot,
      .D = d,
      .projection = projection,
      .projection_dot = -f_ddot / k,
      .H = std::move(h),
      .K = f_ddot * f_ddot / (static_cast<double>(k) * k),
      .moving_frame = frame_value,
      .N = fundamental_nilpotent(k, frame.n()),
      .h_formula_residual = residual,
  };
}

Matrix jacobi_matrix(const FrameJet& frame, JacobiKind kind) {
  const int k = frame.k();
  const Index n = frame.n();
  frame.require_order(k + 1, "jacobi_matrix");
  require_normal(frame);
  const CoefficientSet c = ode_coefficients(frame);

  // For a normal frame kappa = P_2 and h_j = P_{j+2}.
  auto inv = [&](int j) -> Matrix { return c.P(j + 2).value(); };
  auto dinv = [&](int j) -> Matrix { return c.P(j + 2).deriv(1); };

  Matrix column = Matrix::Zero(static_cast<Index>(k) * n, n);
  for (int i = 1; i <= k - 1; ++i) {
    const Index row = static_cast<Index>(k - 1 - i) * n;
    if (i == 1) {
      column.middleRows(row, n) = (k - 1.0) * inv(0);
    } else {
      column.middleRows(row, n) = binomial(k - 1, i) * (inv(i - 1) - dinv(i - 2));
    }
  }

  const Index dim = static_cast<Index>(k) * n;
  Matrix out = Matrix::Zero(dim, dim);
  if (kind == JacobiKind::jacobi) {
    out.middleCols(static_cast<Index>(k - 2) * n, n) = column;
    out.block(static_cast<Index>(k - 1) * n, static_cast<Index>(k - 1) * n, n, n) = (k - 1.0) * inv(0);
  } else {
    out.middleCols(static_cast<Index>(k - 1) * n, n) = column;
    out.block(static_cast<Index>(k - 1) * n, static_cast<Index>(k - 2) * n, n, n).setIdentity();
  }
  return out;
}

Matrix jacobi_matrix_by_change_of_basis(const FrameJet& frame, JacobiKind kind) {
  const EndomorphismBundle b = endomorphism_bundle(frame);
  const Matrix& op = kind == JacobiKind::jacobi ? b.K : b.projection_dot;
  return solve(b.moving_frame, op * b.moving_frame);
}

Matrix maurer_cartan_pullback(const FrameJet& frame, CartanLift lift) {
  frame.require_order(frame.k() + 1, "maurer_cartan_pullback");
  require_normal(frame);
  const MatrixJet m = lift == CartanLift::horizontal ? moving_frame(frame) : frame.juxtaposed();
  return solve(m.value(), m.deriv(1));
}

}  // namespace fanning
