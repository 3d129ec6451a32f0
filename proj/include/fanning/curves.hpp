#pragma once

// Frame curves A(t) of kn x n matrices spanning curves in Gr(n, kn), and
// their jets. Two backends: polynomial curves (exact jets) and curves defined
// by the linear ODE
//
//   A^(k) + C(k,1) A^(k-1) P_1 + C(k,2) A^(k-2) P_2 + ... + A P_k = 0
//
// with polynomial coefficients P_i and initial juxtaposed matrix at t = 0.

#include <span>
#include <variant>
#include <vector>

#include "fanning/matjet.hpp"
#include "fanning/ode.hpp"

namespace fanning {

/// A matrix-valued polynomial sum_i M_i t^i.
class PolynomialMatrix {
 public:
  PolynomialMatrix(Index rows, Index cols, std::vector<Matrix> coefficients);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const Matrix> coefficients() const noexcept { return coefficients_; }

  Matrix operator()(double t) const;

  /// Exact Taylor shift to base point t, truncated (or zero-extended) to `order`.
  MatrixJet jet_at(double t, int order) const;

 private:
  Index rows_;
  Index cols_;
  std::vector<Matrix> coefficients_;
};

/// Jet of a frame at a base time, with its juxtaposed lift
/// (A | A' | ... | A^(k-1)) and, when fanning, the lift's jet inverse.
class FrameJet {
 public:
  /// Requires jet.rows() == k*n, jet.cols() == n and order >= k-1.
  FrameJet(int k, int n, MatrixJet jet, double max_condition = kDefaultMaxCondition);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  Index dim() const noexcept { return static_cast<Index>(k_) * n_; }
  int order() const noexcept { return jet_.order(); }
  double base_time() const noexcept { return jet_.base_time(); }
  const MatrixJet& jet() const noexcept { return jet_; }

  /// Jet of A^(j), order order()-j.
  MatrixJet derivative_jet(int j) const;

  /// Jet of (A | A' | ... | A^(k-1)), order order()-k+1.
  const MatrixJet& juxtaposed() const noexcept { return juxtaposed_; }

  bool is_fanning() const noexcept { return fanning_; }
  double condition() const noexcept { return condition_; }

  /// Throws NotFanningError carrying the condition number when not fanning.
  void require_fanning() const;
  const MatrixJet& juxtaposed_inverse() const;

  /// Throws InsufficientOrderError when order() < required.
  void require_order(int required, const char* what) const;

 private:
  int k_;
  int n_;
  MatrixJet jet_;
  MatrixJet juxtaposed_;
  std::vector<MatrixJet> juxtaposed_inverse_;  // empty unless fanning
  double condition_;
  bool fanning_;
};

/// T * A for a constant T in GL(kn).
FrameJet left_act(const Matrix& transform, const FrameJet& frame);

/// A * X for a jet X of n x n matrices; the order is min of both.
FrameJet right_act(const FrameJet& frame, const MatrixJet& change);

class PolynomialFrameCurve {
 public:
  /// Each coefficient must be kn x n; k >= 2, n >= 1.
  PolynomialFrameCurve(int k, int n, std::vector<Matrix> coefficients);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int degree() const noexcept { return poly_.degree(); }
  const PolynomialMatrix& polynomial() const noexcept { return poly_; }

  Matrix operator()(double t) const { return poly_(t); }

 private:
  int k_;
  int n_;
  PolynomialMatrix poly_;
};

class OdeFrameCurve {
 public:
  /// `coefficients` holds P_1..P_k (n x n); `initial` is the kn x kn juxtaposed
  /// matrix at t = 0 and must be invertible.
  OdeFrameCurve(int k, int n, std::vector<PolynomialMatrix> coefficients, Matrix initial,
                IntegratorSettings settings = {});

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::span<const PolynomialMatrix> coefficients() const noexcept { return coefficients_; }
  const Matrix& initial() const noexcept { return initial_; }
  const IntegratorSettings& settings() const noexcept { return settings_; }

  /// Juxtaposed matrix (A | ... | A^(k-1)) at time t, by integration from 0.
  Matrix juxtaposed_at(double t) const;

  Matrix operator()(double t) const;

 private:
  int k_;
  int n_;
  std::vector<PolynomialMatrix> coefficients_;
  Matrix initial_;
  IntegratorSettings settings_;
};

using FrameCurve = std::variant<PolynomialFrameCurve, OdeFrameCurve>;

/// Exact jet of a polynomial frame curve at t. Throws if order < k-1.
FrameJet eval_frame_jet(const PolynomialFrameCurve& curve, double t, int order);

/// Integrates the defining ODE to t, then fills A^(k), A^(k+1), ... by
/// differentiating the equation through jet arithmetic.
FrameJet integrate_ode_jet(const OdeFrameCurve& curve, double t, int order);

/// Builds the order-`order` frame jet at `base_time` whose first k derivatives
/// are `initial` (kn x kn, column blocks A, A', ..., A^(k-1)) and which solves
/// the ODE with coefficient jets p[i-1] = P_i.
FrameJet extend_by_ode(int k, int n, const Matrix& initial, std::span<const MatrixJet> p,
                       int order);

/// Jet of the canonical frame with A^(j)(0) equal to the j-th block column of
/// the identity for j <= k-1 and all higher derivatives zero.
FrameJet standard_jet(int k, int n, int order, double base_time = 0.0);

/// A(t) = E_0 + t E_1 + ... + t^(k-1) E_(k-1), E_j the j-th identity block column.
PolynomialFrameCurve standard_curve(int k, int n);

FrameJet frame_jet(const FrameCurve& curve, double t, int order);
int curve_k(const FrameCurve& curve);
int curve_n(const FrameCurve& curve);
Matrix curve_value(const FrameCurve& curve, double t);

/// Block column j (kn x n) of the kn x kn identity.
Matrix identity_block_column(int k, int n, int j);

}  // namespace fanning
