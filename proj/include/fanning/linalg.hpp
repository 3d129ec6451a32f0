#pragma once

// Small dense helpers shared by the geometry modules.

#include <Eigen/Dense>

namespace fanning {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// 2-norm condition number (infinity for singular or empty matrices).
double condition_number(const Matrix& m);

double max_abs(const Matrix& m);

/// Numerical rank by column-pivoting QR with threshold rtol * |R_00|.
Index numerical_rank(const Matrix& m, double rtol = 1e-8);

/// Orthonormal basis of the column space (rank-revealing QR, threshold rtol).
Matrix orthonormal_basis(const Matrix& m, double rtol = 1e-8);

/// Orthonormal basis of the null space, from singular values <= rtol * sigma_max.
Matrix null_space(const Matrix& m, double rtol = 1e-8);

/// Sine of the largest principal angle between the column spans of a and b.
/// Returns 1 when the dimensions differ.
double subspace_distance(const Matrix& a, const Matrix& b, double rtol = 1e-8);

/// kn x kn block-diagonal matrix with `block` repeated `copies` times.
Matrix block_diagonal(const Matrix& block, int copies);

}  // namespace fanning
