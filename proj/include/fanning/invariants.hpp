#pragma once

// Differential invariants of fanning frames, all computed from jets at a point:
// the ODE coefficients P_i, the Schwarzian {A,t} = 2(P_2 - P_1^2 - P_1'), the
// invariants h_j, normal frames, the fundamental endomorphism F and what is
// derived from its derivatives (reflection D, projection P, horizontal
// derivative H, Jacobi endomorphism K), and moving-frame matrices.

#include <optional>
#include <span>
#include <vector>

#include "fanning/curves.hpp"
#include "fanning/kernels.hpp"
#include "fanning/matjet.hpp"

namespace fanning {

/// Coefficients of A^(k) + sum_i C(k,i) A^(k-i) P_i = 0 and the invariants
/// kappa = {A,t}/2, h_1..h_{k-2}. Jets share the base time of the frame.
struct CoefficientSet {
  int k = 0;
  int n = 0;
  std::vector<MatrixJet> p;         // p[i-1] = P_i
  std::optional<MatrixJet> kappa;   // absent for a P-only set
  std::vector<MatrixJet> h;         // h[j-1] = h_j

  const MatrixJet& P(int i) const { return p.at(static_cast<std::size_t>(i - 1)); }

  /// Invariant j, with j = 0 meaning kappa.
  const MatrixJet& invariant(int j) const;
};

/// Solves (A|...|A^(k-1)) S = -A^(k) at jet level. Result jets have order R-k
/// for a frame jet of order R. Throws NotFanningError / InsufficientOrderError.
CoefficientSet ode_coefficients(const FrameJet& frame);

/// {A,t} as a jet of order R-k-1.
MatrixJet schwarzian(const FrameJet& frame);

/// W_0 = I, W_{m+1} = -P_1 W_m + W_m'; X^(m) = X W_m when X' = -X P_1.
std::vector<MatrixJet> derivative_factors(const MatrixJet& p1, int count);

/// h_{j-2} = sum_{i=0..j} C(j,i) W_{j-i} P_i (P_0 = I) for j = 2..k.
/// Needs a frame jet of order >= 2k-1 (h_j needs order k+j+1).
CoefficientSet wilczynski_invariants(const FrameJet& frame);
CoefficientSet wilczynski_invariants(const CoefficientSet& coefficients);

/// max|P_1| over all coefficients of its jet, divided by 1 + max|P_2|.
double normality_defect(const CoefficientSet& coefficients);
double normality_defect(const FrameJet& frame);

inline constexpr double kNormalityTolerance = 1e-8;

bool is_normal(const FrameJet& frame, double tol = kNormalityTolerance);

/// Throws NotNormalError when normality_defect exceeds tol.
void require_normal(const FrameJet& frame, double tol = kNormalityTolerance);

/// Polynomial jet Y with Y' = P_1 Y and Y(t0) = initial, known exactly up to
/// order R-k+1 and extended by zeros to order R; A*Y is then normal up to the
/// order carried by its P_1 jet.
MatrixJet normalizing_factor(const FrameJet& frame, const Matrix& initial);

/// A*Y with Y from normalizing_factor; keeps the frame's order.
FrameJet normalize_jet(const FrameJet& frame);
FrameJet normalize_jet(const FrameJet& frame, const Matrix& initial);

struct NormalFrameOptions {
  IntegratorSettings integrator{};
  int jet_order = -1;  // -1: 2k+1
  Execution execution = Execution::parallel;
};

/// Normal frame B = A X^{-1} along a grid, X' = -X P_1 with X(grid[0]) = I.
struct NormalizationRecord {
  int k = 0;
  int n = 0;
  std::vector<double> times;
  std::vector<Matrix> X;
  std::vector<Matrix> B;                 // values of the normal frame
  std::vector<std::vector<Matrix>> Q;    // Q[i][j-2] = Q_j(t_i) = X h_{j-2} X^{-1}, j = 2..k
  std::vector<FrameJet> normal_jets;     // jets of B at each grid time
};

/// Grid must be non-empty and strictly increasing.
NormalizationRecord normal_frame(const FrameCurve& curve, std::span<const double> grid,
                                 const NormalFrameOptions& options = {});

/// Superdiagonal blocks 1 I, 2 I, ..., (k-1) I.
Matrix fundamental_nilpotent(int k, int n);

/// F = (A|...|A^(k-1)) N (A|...|A^(k-1))^{-1} as a jet of order `jet_order`.
MatrixJet fundamental_endomorphism(const FrameJet& frame, int jet_order);

/// Horizontal derivative A^(k-1) - F A^(k) / k as a jet of order R-k.
MatrixJet horizontal_derivative(const FrameJet& frame);

/// Horizontal derivative A^(k-1) + sum_i C(k-1,i) A^(k-1-i) P_i.
MatrixJet horizontal_derivative_from_coefficients(const FrameJet& frame);

/// Columns (A | A' | ... | A^(k-2) | H) as a jet of order R-k.
MatrixJet moving_frame(const FrameJet& frame);

struct EndomorphismBundle {
  MatrixJet F;            // order R-k+1
  Matrix F_dot;
  Matrix F_ddot;
  Matrix D;               // (2F' - (k-2) I) / k
  Matrix projection;      // (I - D) / 2
  Matrix projection_dot;  // -F'' / k
  MatrixJet H;
  Matrix K;               // F''^2 / k^2
  Matrix moving_frame;    // (A | ... | A^(k-2) | H) at the base time
  Matrix N;
  /// Largest disagreement among the three formulas for H at the base time.
  double h_formula_residual;
};

/// Requires order >= k+1.
EndomorphismBundle endomorphism_bundle(const FrameJet& frame);

enum class JacobiKind { jacobi, projection_derivative };

/// Matrix of K (or P') in the basis (A | ... | A^(k-2) | H) of a normal frame,
/// assembled from kappa = P_2, h_j = P_{j+2} and their first derivatives.
/// Requires a normal frame jet of order >= k+1.
Matrix jacobi_matrix(const FrameJet& frame, JacobiKind kind);

/// The same matrix by direct change of basis M^{-1} K M (resp. M^{-1} P' M).
Matrix jacobi_matrix_by_change_of_basis(const FrameJet& frame, JacobiKind kind);

enum class CartanLift { horizontal, kth_derivative };

/// M^{-1} M' at the base time for M = (A|...|A^(k-2)|H) or (A|...|A^(k-1)).
/// Requires a normal frame jet of order >= k+1.
Matrix maurer_cartan_pullback(const FrameJet& frame, CartanLift lift);

}  // namespace fanning
