#include "fanning/matjet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fanning/errors.hpp"
#include "fanning/kernels.hpp"
#include "fanning/linalg.hpp"

namespace fanning {

namespace {

void require_same_base(const MatrixJet& a, const MatrixJet& b, const char* op) {
  const double scale = 1.0 + std::max(std::abs(a.base_time()), std::abs(b.base_time()));
  if (std::abs(a.base_time() - b.base_time()) > 1e-12 * scale) {
    std::ostringstream os;
    os << op << ": base times differ (" << a.base_time() << " vs " << b.base_time() << ")";
    throw ShapeError(os.str());
  }
}

void require_same_shape(const MatrixJet& a, const MatrixJet& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << op << ": shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw ShapeError(os.str());
  }
}

}  // namespace

double factorial(int i) {
  double f = 1.0;
  for (int j = 2; j <= i; ++j) f *= j;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return std::round(b);
}

MatrixJet::MatrixJet(double base_time, std::vector<Matrix> coeffs)
    : base_time_(base_time), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ShapeError("MatrixJet: at least one coefficient is required");
  for (const auto& c : coeffs_) {
    if (c.rows() != coeffs_.front().rows() || c.cols() != coeffs_.front().cols()) {
      throw ShapeError("MatrixJet: coefficient shapes differ");
    }
  }
}

MatrixJet MatrixJet::constant(double base_time, const Matrix& value, int order) {
  std::vector<Matrix> c(static_cast<std::size_t>(order + 1), Matrix::Zero(value.rows(), value.cols()));
  c[0] = value;
  return {base_time, std::move(c)};
}

MatrixJet MatrixJet::identity(double base_time, Index dim, int order) {
  return constant(base_time, Matrix::Identity(dim, dim), order);
}

MatrixJet MatrixJet::zero(double base_time, Index rows, Index cols, int order) {
  return constant(base_time, Matrix::Zero(rows, cols), order);
}

const Matrix& MatrixJet::coeff(int i) const {
  if (i < 0 || i > order()) {
    throw InsufficientOrderError("MatrixJet::coeff", i, order());
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

Matrix MatrixJet::deriv(int i) const { return factorial(i) * coeff(i); }

MatrixJet MatrixJet::truncated(int new_order) const {
  if (new_order > order()) throw InsufficientOrderError("MatrixJet::truncated", new_order, order());
  if (new_order < 0) throw ShapeError("MatrixJet::truncated: negative order");
  return {base_time_, {coeffs_.begin(), coeffs_.begin() + new_order + 1}};
}

MatrixJet MatrixJet::block(Index row, Index col, Index nrows, Index ncols) const {
  std::vector<Matrix> c;
  c.reserve(coeffs_.size());
  for (const auto& m : coeffs_) c.emplace_back(m.block(row, col, nrows, ncols));
  return {base_time_, std::move(c)};
}

double MatrixJet::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, fanning::max_abs(c));
  return m;
}

MatrixJet add(const MatrixJet& a, const MatrixJet& b) {
  require_same_base(a, b, "add");
  require_same_shape(a, b, "add");
  const int order = std::min(a.order(), b.order());
  std::vector<Matrix> c(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) c[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
  return {a.base_time(), std::move(c)};
}

MatrixJet subtract(const MatrixJet& a, const MatrixJet& b) {
  require_same_base(a, b, "subtract");
  require_same_shape(a, b, "subtract");
  const int order = std::min(a.order(), b.order());
  std::vector<Matrix> c(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) c[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
  return {a.base_time(), std::move(c)};
}

MatrixJet scale(double s, const MatrixJet& a) {
  std::vector<Matrix> c;
  c.reserve(a.coeffs().size());
  for (const auto& m : a.coeffs()) c.emplace_back(s * m);
  return {a.base_time(), std::move(c)};
}

MatrixJet multiply(const MatrixJet& a, const MatrixJet& b) {
  require_same_base(a, b, "multiply");
  if (a.cols() != b.rows()) {
    std::ostringstream os;
    os << "multiply: inner dimensions " << a.cols() << " and " << b.rows();
    throw ShapeError(os.str());
  }
  const int order = std::min(a.order(), b.order());
  return {a.base_time(), kernels::cauchy_product(a.coeffs(), b.coeffs(), order)};
}

MatrixJet multiply(const Matrix& left, const MatrixJet& a) {
  if (left.cols() != a.rows()) throw ShapeError("multiply: constant factor does not fit the jet");
  std::vector<Matrix> c;
  c.reserve(a.coeffs().size());
  for (const auto& m : a.coeffs()) c.emplace_back(left * m);
  return {a.base_time(), std::move(c)};
}

MatrixJet multiply(const MatrixJet& a, const Matrix& right) {
  if (a.cols() != right.rows()) throw ShapeError("multiply: constant factor does not fit the jet");
  std::vector<Matrix> c;
  c.reserve(a.coeffs().size());
  for (const auto& m : a.coeffs()) c.emplace_back(m * right);
  return {a.base_time(), std::move(c)};
}

MatrixJet inverse(const MatrixJet& a, double max_condition) {
  if (a.rows() != a.cols()) throw ShapeError("inverse: jet is not square");
  const double cond = condition_number(a.value());
  if (!(cond <= max_condition)) {
    std::ostringstream os;
    os << "inverse: leading coefficient has condition number " << cond << " (limit "
       << max_condition << ")";
    throw IllConditionedError(os.str(), cond);
  }
  const Eigen::PartialPivLU<Matrix> lu(a.value());
  const Index dim = a.rows();
  std::vector<Matrix> b(static_cast<std::size_t>(a.order() + 1));
  b[0] = lu.solve(Matrix::Identity(dim, dim));
  for (int m = 1; m <= a.order(); ++m) {
    Matrix acc = Matrix::Zero(dim, dim);
    for (int i = 1; i <= m; ++i) acc.noalias() += a.coeff(i) * b[static_cast<std::size_t>(m - i)];
    b[static_cast<std::size_t>(m)] = -(b[0] * acc);
  }
  return {a.base_time(), std::move(b)};
}

MatrixJet derivative(const MatrixJet& a) {
  if (a.order() < 1) throw InsufficientOrderError("derivative", 1, a.order());
  std::vector<Matrix> c(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) c[static_cast<std::size_t>(i)] = (i + 1.0) * a.coeff(i + 1);
  return {a.base_time(), std::move(c)};
}

MatrixJet derivative(const MatrixJet& a, int times) {
  if (times > a.order()) throw InsufficientOrderError("derivative", times, a.order());
  MatrixJet out = a;
  for (int i = 0; i < times; ++i) out = derivative(out);
  return out;
}

Matrix evaluate(const MatrixJet& a, double t) {
  const double s = t - a.base_time();
  Matrix acc = a.coeff(a.order());
  for (int i = a.order() - 1; i >= 0; --i) acc = acc * s + a.coeff(i);
  return acc;
}

MatrixJet hstack(std::span<const MatrixJet> parts) {
  if (parts.empty()) throw ShapeError("hstack: nothing to stack");
  int order = parts.front().order();
  Index cols = 0;
  for (const auto& p : parts) {
    require_same_base(parts.front(), p, "hstack");
    if (p.rows() != parts.front().rows()) throw ShapeError("hstack: row counts differ");
    order = std::min(order, p.order());
    cols += p.cols();
  }
  std::vector<Matrix> c(static_cast<std::size_t>(order + 1), Matrix(parts.front().rows(), cols));
  for (int i = 0; i <= order; ++i) {
    Index col = 0;
    for (const auto& p : parts) {
      c[static_cast<std::size_t>(i)].middleCols(col, p.cols()) = p.coeff(i);
      col += p.cols();
    }
  }
  return {parts.front().base_time(), std::move(c)};
}

}  // namespace fanning
