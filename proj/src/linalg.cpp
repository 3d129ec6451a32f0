#include "fanning/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fanning {

double condition_number(const Matrix& m) {
  if (m.size() == 0) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Index numerical_rank(const Matrix& m, double rtol) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  const Matrix r = qr.matrixR().template triangularView<Eigen::Upper>();
  const Index diag = std::min(r.rows(), r.cols());
  if (diag == 0) return 0;
  const double lead = std::abs(r(0, 0));
  if (lead == 0.0) return 0;
  Index rank = 0;
  for (Index i = 0; i < diag; ++i) {
    if (std::abs(r(i, i)) > rtol * lead) ++rank;
  }
  return rank;
}

Matrix orthonormal_basis(const Matrix& m, double rtol) {
  const Index rank = numerical_rank(m, rtol);
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  const Matrix q = qr.householderQ();
  return q.leftCols(rank);
}

Matrix null_space(const Matrix& m, double rtol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > rtol * smax) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

double subspace_distance(const Matrix& a, const Matrix& b, double rtol) {
  const Matrix qa = orthonormal_basis(a, rtol);
  const Matrix qb = orthonormal_basis(b, rtol);
  if (qa.cols() != qb.cols()) return 1.0;
  if (qa.cols() == 0) return 0.0;
  const Matrix residual = qa - qb * (qb.transpose() * qa);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return std::min(1.0, svd.singularValues()(0));
}

Matrix block_diagonal(const Matrix& block, int copies) {
  const Index r = block.rows();
  const Index c = block.cols();
  Matrix out = Matrix::Zero(r * copies, c * copies);
  for (int i = 0; i < copies; ++i) out.block(i * r, i * c, r, c) = block;
  return out;
}

}  // namespace fanning
