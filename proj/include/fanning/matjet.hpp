#pragma once

// Truncated Taylor expansions of matrix-valued curves.
//
// A MatrixJet of order r at base time t0 stores c_0..c_r and represents
//   M(t) = sum_i c_i (t - t0)^i,   M^{(i)}(t0) = i! c_i.
// Binary operations truncate to the smaller order: coefficients beyond an
// operand's order are unknown, not zero.

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fanning {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Default bound on the 2-norm condition number of a matrix we agree to invert.
inline constexpr double kDefaultMaxCondition = 1e8;

double factorial(int i);
double binomial(int n, int k);

class MatrixJet {
 public:
  /// Throws ShapeError if `coeffs` is empty or the coefficients disagree in shape.
  MatrixJet(double base_time, std::vector<Matrix> coeffs);

  static MatrixJet constant(double base_time, const Matrix& value, int order);
  static MatrixJet identity(double base_time, Index dim, int order);
  static MatrixJet zero(double base_time, Index rows, Index cols, int order);

  double base_time() const noexcept { return base_time_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Index rows() const noexcept { return coeffs_.front().rows(); }
  Index cols() const noexcept { return coeffs_.front().cols(); }

  const Matrix& coeff(int i) const;
  std::span<const Matrix> coeffs() const noexcept { return coeffs_; }
  const Matrix& value() const noexcept { return coeffs_.front(); }

  /// i-th derivative at the base time, i! c_i.
  Matrix deriv(int i) const;

  MatrixJet truncated(int order) const;

  /// Sub-block of every coefficient.
  MatrixJet block(Index row, Index col, Index rows, Index cols) const;

  /// Largest absolute entry over all coefficients.
  double max_abs() const;

 private:
  double base_time_;
  std::vector<Matrix> coeffs_;
};

MatrixJet add(const MatrixJet& a, const MatrixJet& b);
MatrixJet subtract(const MatrixJet& a, const MatrixJet& b);
MatrixJet scale(double s, const MatrixJet& a);

/// Truncated Cauchy product; the result has order min(order(a), order(b)).
MatrixJet multiply(const MatrixJet& a, const MatrixJet& b);

/// Product with a constant matrix on the left / right (keeps the jet's order).
MatrixJet multiply(const Matrix& left, const MatrixJet& a);
MatrixJet multiply(const MatrixJet& a, const Matrix& right);

/// Jet of M(t)^{-1}: b_0 = c_0^{-1}, b_m = -b_0 sum_{i=1..m} c_i b_{m-i}.
/// Throws IllConditionedError when cond(c_0) exceeds `max_condition`.
MatrixJet inverse(const MatrixJet& a, double max_condition = kDefaultMaxCondition);

/// d/dt; the order drops by one. Throws InsufficientOrderError for order-0 jets.
MatrixJet derivative(const MatrixJet& a);

/// Applies `derivative` `times` times.
MatrixJet derivative(const MatrixJet& a, int times);

/// Horner evaluation of the truncated series at t.
Matrix evaluate(const MatrixJet& a, double t);

/// Horizontal concatenation [a_0 | a_1 | ...] truncated to the smallest order.
MatrixJet hstack(std::span<const MatrixJet> parts);

inline MatrixJet operator+(const MatrixJet& a, const MatrixJet& b) { return add(a, b); }
inline MatrixJet operator-(const MatrixJet& a, const MatrixJet& b) { return subtract(a, b); }
inline MatrixJet operator-(const MatrixJet& a) { return scale(-1.0, a); }
inline MatrixJet operator*(double s, const MatrixJet& a) { return scale(s, a); }
inline MatrixJet operator*(const MatrixJet& a, const MatrixJet& b) { return multiply(a, b); }
inline MatrixJet operator*(const Matrix& m, const MatrixJet& a) { return multiply(m, a); }
inline MatrixJet operator*(const MatrixJet& a, const Matrix& m) { return multiply(a, m); }

}  // namespace fanning
