#include "fanning/curves.hpp"

#include <cmath>
#include <sstream>

#include "fanning/errors.hpp"
#include "fanning/linalg.hpp"

namespace fanning {

namespace {

void require_grassmann(int k, int n, const char* what) {
  if (k < 2 || n < 1) {
    std::ostringstream os;
    os << what << ": need k >= 2 and n >= 1 (got k=" << k << ", n=" << n << ")";
    throw ShapeError(os.str());
  }
}

}  // namespace

Matrix identity_block_column(int k, int n, int j) {
  Matrix e = Matrix::Zero(static_cast<Index>(k) * n, n);
  e.block(static_cast<Index>(j) * n, 0, n, n).setIdentity();
  return e;
}

// ---------------------------------------------------------------------------
// PolynomialMatrix

PolynomialMatrix::PolynomialMatrix(Index rows, Index cols, std::vector<Matrix> coefficients)
    : rows_(rows), cols_(cols), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.push_back(Matrix::Zero(rows, cols));
  for (const auto& c : coefficients_) {
    if (c.rows() != rows || c.cols() != cols) {
      std::ostringstream os;
      os << "polynomial coefficient has shape " << c.rows() << "x" << c.cols() << ", expected "
         << rows << "x" << cols;
      throw ShapeError(os.str());
    }
  }
}

Matrix PolynomialMatrix::operator()(double t) const {
  Matrix acc = coefficients_.back();
  for (int i = degree() - 1; i >= 0; --i) acc = acc * t + coefficients_[static_cast<std::size_t>(i)];
  return acc;
}

MatrixJet PolynomialMatrix::jet_at(double t, int order) const {
  // c_j = sum_{i>=j} C(i,j) t^(i-j) M_i
  std::vector<Matrix> c(static_cast<std::size_t>(order + 1), Matrix::Zero(rows_, cols_));
  for (int j = 0; j <= std::min(order, degree()); ++j) {
    Matrix acc = Matrix::Zero(rows_, cols_);
    double tp = 1.0;
    for (int i = j; i <= degree(); ++i) {
      acc += binomial(i, j) * tp * coefficients_[static_cast<std::size_t>(i)];
      tp *= t;
    }
    c[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return {t, std::move(c)};
}

// ---------------------------------------------------------------------------
// FrameJet

FrameJet::FrameJet(int k, int n, MatrixJet jet, double max_condition)
    : k_(k), n_(n), jet_(std::move(jet)), juxtaposed_(jet_), condition_(0.0), fanning_(false) {
  require_grassmann(k, n, "FrameJet");
  if (jet_.rows() != dim() || jet_.cols() != n) {
    std::ostringstream os;
    os << "FrameJet: jet is " << jet_.rows() << "x" << jet_.cols() << ", expected " << dim()
       << "x" << n;
    throw ShapeError(os.str());
  }
  require_order(k - 1, "FrameJet");
  std::vector<MatrixJet> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) blocks.push_back(derivative_jet(j));
  juxtaposed_ = hstack(blocks);
  condition_ = condition_number(juxtaposed_.value());
  fanning_ = condition_ <= max_condition;
  if (fanning_) juxtaposed_inverse_.push_back(inverse(juxtaposed_, max_condition));
}

MatrixJet FrameJet::derivative_jet(int j) const { return derivative(jet_, j); }

void FrameJet::require_fanning() const {
  if (!fanning_) {
    std::ostringstream os;
    os << "frame is not fanning at t=" << base_time() << " (condition number of (A|A'|...) is "
       << condition_ << ")";
    throw NotFanningError(os.str(), condition_, base_time());
  }
}

const MatrixJet& FrameJet::juxtaposed_inverse() const {
  require_fanning();
  return juxtaposed_inverse_.front();
}

void FrameJet::require_order(int required, const char* what) const {
  if (order() < required) throw InsufficientOrderError(what, required, order());
}

FrameJet left_act(const Matrix& transform, const FrameJet& frame) {
  return {frame.k(), frame.n(), multiply(transform, frame.jet())};
}

FrameJet right_act(const FrameJet& frame, const MatrixJet& change) {
  return {frame.k(), frame.n(), multiply(frame.jet(), change)};
}

// ---------------------------------------------------------------------------
// Curves

PolynomialFrameCurve::PolynomialFrameCurve(int k, int n, std::vector<Matrix> coefficients)
    : k_(k), n_(n), poly_(static_cast<Index>(k) * n, n, std::move(coefficients)) {
  require_grassmann(k, n, "PolynomialFrameCurve");
}

OdeFrameCurve::OdeFrameCurve(int k, int n, std::vector<PolynomialMatrix> coefficients,
                             Matrix initial, IntegratorSettings settings)
    : k_(k), n_(n), coefficients_(std::move(coefficients)), initial_(std::move(initial)),
      settings_(settings) {
  require_grassmann(k, n, "OdeFrameCurve");
  if (static_cast<int>(coefficients_.size()) != k) {
    throw ShapeError("OdeFrameCurve: expected P_1..P_k (" + std::to_string(k) + " coefficients)");
  }
  for (const auto& p : coefficients_) {
    if (p.rows() != n || p.cols() != n) throw ShapeError("OdeFrameCurve: P_i must be n x n");
  }
  const Index dim = static_cast<Index>(k) * n;
  if (initial_.rows() != dim || initial_.cols() != dim) {
    throw ShapeError("OdeFrameCurve: initial juxtaposed matrix must be kn x kn");
  }
  const double cond = condition_number(initial_);
  if (!(cond <= kDefaultMaxCondition)) {
    throw NotFanningError("OdeFrameCurve: initial juxtaposed matrix is not invertible", cond, 0.0);
  }
}

Matrix OdeFrameCurve::juxtaposed_at(double t) const {
  const int k = k_;
  const Index n = n_;
  std::vector<Matrix> p(static_cast<std::size_t>(k));
  auto rhs = [&](double time, const Matrix& y, Matrix& dy) {
    dy.resize(y.rows(), y.cols());
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = coefficients_[static_cast<std::size_t>(i)](time);
    dy.leftCols((k - 1) * n) = y.rightCols((k - 1) * n);
    auto last = dy.rightCols(n);
    last.setZero();
    for (int i = 1; i <= k; ++i) {
      last.noalias() -= binomial(k, i) * (y.middleCols((k - i) * n, n) * p[static_cast<std::size_t>(i - 1)]);
    }
  };
  return integrate_matrix_ode(rhs, initial_, 0.0, t, settings_);
}

Matrix OdeFrameCurve::operator()(double t) const { return juxtaposed_at(t).leftCols(n_); }

FrameJet eval_frame_jet(const PolynomialFrameCurve& curve, double t, int order) {
  if (order < curve.k() - 1) {
    throw InsufficientOrderError("eval_frame_jet", curve.k() - 1, order);
  }
  return {curve.k(), curve.n(), curve.polynomial().jet_at(t, order)};
}

FrameJet extend_by_ode(int k, int n, const Matrix& initial, std::span<const MatrixJet> p,
                       int order) {
  require_grassmann(k, n, "extend_by_ode");
  const Index dim = static_cast<Index>(k) * n;
  if (initial.rows() != dim || initial.cols() != dim) {
    throw ShapeError("extend_by_ode: initial data must be kn x kn");
  }
  if (static_cast<int>(p.size()) != k) throw ShapeError("extend_by_ode: expected k coefficient jets");
  if (order < k - 1) throw InsufficientOrderError("extend_by_ode", k - 1, order);
  const double t0 = p.front().base_time();
  for (const auto& pi : p) {
    if (order >= k && pi.order() < order - k) {
      throw InsufficientOrderError("extend_by_ode: coefficient jet", order - k, pi.order());
    }
  }

  std::vector<Matrix> a;
  a.reserve(static_cast<std::size_t>(order + 1));
  for (int j = 0; j < k && j <= order; ++j) a.emplace_back(initial.middleCols(j * n, n) / factorial(j));

  // Coefficient m of A follows from coefficient m-k of A^(k) = -sum C(k,i) A^(k-i) P_i,
  // whose right-hand side only involves a_0..a_{m-1}.
  for (int m = k; m <= order; ++m) {
    const MatrixJet known(t0, a);
    MatrixJet rhs = MatrixJet::zero(t0, dim, n, m - k);
    for (int i = 1; i <= k; ++i) {
      const MatrixJet term = derivative(known, k - i).truncated(m - k) *
                             p[static_cast<std::size_t>(i - 1)].truncated(m - k);
      rhs = rhs - binomial(k, i) * term;
    }
    a.emplace_back(rhs.coeff(m - k) * (factorial(m - k) / factorial(m)));
  }
  return {k, n, MatrixJet(t0, std::move(a))};
}

FrameJet integrate_ode_jet(const OdeFrameCurve& curve, double t, int order) {
  if (order < curve.k() - 1) throw InsufficientOrderError("integrate_ode_jet", curve.k() - 1, order);
  const Matrix state = curve.juxtaposed_at(t);
  std::vector<MatrixJet> p;
  p.reserve(curve.coefficients().size());
  for (const auto& pi : curve.coefficients()) p.push_back(pi.jet_at(t, std::max(0, order - curve.k())));
  return extend_by_ode(curve.k(), curve.n(), state, p, order);
}

FrameJet standard_jet(int k, int n, int order, double base_time) {
  require_grassmann(k, n, "standard_jet");
  if (order < k - 1) throw InsufficientOrderError("standard_jet", k - 1, order);
  const Index dim = static_cast<Index>(k) * n;
  std::vector<Matrix> c(static_cast<std::size_t>(order + 1), Matrix::Zero(dim, n));
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = identity_block_column(k, n, j) / factorial(j);
  return {k, n, MatrixJet(base_time, std::move(c))};
}

PolynomialFrameCurve standard_curve(int k, int n) {
  std::vector<Matrix> c;
  for (int j = 0; j < k; ++j) c.push_back(identity_block_column(k, n, j));
  return {k, n, std::move(c)};
}

FrameJet frame_jet(const FrameCurve& curve, double t, int order) {
  return std::visit(
      [&](const auto& c) -> FrameJet {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PolynomialFrameCurve>) {
          return eval_frame_jet(c, t, order);
        } else {
          return integrate_ode_jet(c, t, order);
        }
      },
      curve);
}

int curve_k(const FrameCurve& curve) {
  return std::visit([](const auto& c) { return c.k(); }, curve);
}

int curve_n(const FrameCurve& curve) {
  return std::visit([](const auto& c) { return c.n(); }, curve);
}

Matrix curve_value(const FrameCurve& curve, double t) {
  return std::visit([&](const auto& c) -> Matrix { return c(t); }, curve);
}

}  // namespace fanning
