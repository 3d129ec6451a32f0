#pragma once

// Seeded random inputs for property tests.

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "fanning/curves.hpp"
#include "fanning/invariants.hpp"
#include "fanning/linalg.hpp"

namespace fanning::testing {

using Rng = std::mt19937_64;

inline Matrix random_matrix(Index rows, Index cols, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) m(r, c) = g(rng);
  }
  return m;
}

inline Matrix random_gl(Index dim, Rng& rng, double max_condition = 1e3) {
  for (;;) {
    Matrix t = random_matrix(dim, dim, rng);
    if (condition_number(t) <= max_condition) return t;
  }
}

/// Jet whose derivatives at the base time are standard normal (coefficients d_j / j!).
inline MatrixJet random_jet(Index rows, Index cols, int order, Rng& rng, double base_time = 0.0) {
  std::vector<Matrix> c;
  for (int j = 0; j <= order; ++j) c.push_back(random_matrix(rows, cols, rng) / factorial(j));
  return {base_time, std::move(c)};
}

/// Fanning frame jet with cond(A|...|A^(k-1)) <= max_condition.
inline FrameJet random_frame_jet(int k, int n, int order, Rng& rng, double base_time = 0.0,
                                 double max_condition = 1e3) {
  for (;;) {
    FrameJet f(k, n, random_jet(static_cast<Index>(k) * n, n, order, rng, base_time));
    if (f.condition() <= max_condition) return f;
  }
}

/// Fanning frame jet whose normalized jet (normalize_jet) also has a lift with
/// condition <= max_condition. Large P_1 jets make the normalized lift nearly singular.
inline FrameJet random_normalizable_frame_jet(int k, int n, int order, Rng& rng, double base_time = 0.0,
                                              double max_condition = 1e3) {
  for (;;) {
    FrameJet f = random_frame_jet(k, n, order, rng, base_time, max_condition);
    if (normalize_jet(f).condition() <= max_condition) return f;
  }
}

/// Jet of a frame change X(t) with X(t0) well conditioned.
inline MatrixJet random_change_jet(int n, int order, Rng& rng, double base_time = 0.0) {
  MatrixJet x = random_jet(n, n, order, rng, base_time);
  std::vector<Matrix> c(x.coeffs().begin(), x.coeffs().end());
  c[0] = random_gl(n, rng, 50.0);
  return {base_time, std::move(c)};
}

struct NormalJetSample {
  FrameJet frame;
  std::vector<MatrixJet> p;  // the P_1..P_k jets it was built from (P_1 = 0)
};

/// Exact jet of a normal frame (P_1 = 0) with random P_2..P_k jets and random initial data.
inline NormalJetSample random_normal_sample(int k, int n, int order, Rng& rng, double base_time = 0.0) {
  std::vector<MatrixJet> p;
  const int p_order = std::max(0, order - k);
  p.push_back(MatrixJet::zero(base_time, n, n, p_order));
  for (int i = 2; i <= k; ++i) p.push_back(random_jet(n, n, p_order, rng, base_time));
  for (;;) {
    const Matrix initial = random_gl(static_cast<Index>(k) * n, rng, 1e2);
    FrameJet f = extend_by_ode(k, n, initial, p, order);
    if (f.condition() <= 1e3) return {std::move(f), std::move(p)};
  }
}

inline FrameJet random_normal_jet(int k, int n, int order, Rng& rng, double base_time = 0.0) {
  return random_normal_sample(k, n, order, rng, base_time).frame;
}

/// Largest condition number of the juxtaposed matrix on `points` equispaced times in [a, b].
inline double worst_condition(const PolynomialFrameCurve& c, double a, double b, int points = 401) {
  double worst = 0;
  for (int i = 0; i < points; ++i) {
    const double t = a + (b - a) * i / (points - 1);
    worst = std::max(worst, eval_frame_jet(c, t, c.k() - 1).condition());
  }
  return worst;
}

/// Condition bounded on a grid and det(A|...|A^(k-1)) of one sign, so no simple
/// root of the determinant hides between grid points.
inline bool fanning_on(const PolynomialFrameCurve& c, double a, double b, double max_condition, int points = 401) {
  double sign = 0;
  for (int i = 0; i < points; ++i) {
    const double t = a + (b - a) * i / (points - 1);
    const FrameJet f = eval_frame_jet(c, t, c.k() - 1);
    if (f.condition() > max_condition) return false;
    const double s = f.juxtaposed().value().determinant() > 0 ? 1.0 : -1.0;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

/// Polynomial curve with coefficients N(0,1)/j!, fanning on [a, b] with bounded condition.
inline PolynomialFrameCurve random_polynomial_curve(int k, int n, int degree, Rng& rng, double a = 0.0,
                                                    double b = 1.0, double max_condition = 5e2) {
  for (;;) {
    std::vector<Matrix> c;
    for (int j = 0; j <= degree; ++j) c.push_back(random_matrix(static_cast<Index>(k) * n, n, rng) / factorial(j));
    PolynomialFrameCurve curve(k, n, std::move(c));
    if (fanning_on(curve, a, b, max_condition)) return curve;
  }
}

/// Coefficients of T A(t) (X0 + t X1) for a polynomial curve A.
inline PolynomialFrameCurve transformed(const PolynomialFrameCurve& a, const Matrix& t, const Matrix& x0,
                                        const Matrix& x1) {
  const auto src = a.polynomial().coefficients();
  std::vector<Matrix> out(src.size() + 1, Matrix::Zero(a.polynomial().rows(), a.n()));
  for (std::size_t m = 0; m < src.size(); ++m) {
    out[m] += t * src[m] * x0;
    out[m + 1] += t * src[m] * x1;
  }
  return {a.k(), a.n(), std::move(out)};
}

/// X0, X1 with sigma_min(X0 + t X1) >= 0.3 on [0, 1]. The grid step bounds the
/// drift of sigma_min between samples by |X1| / 200.
inline std::pair<Matrix, Matrix> random_affine_change(int n, Rng& rng) {
  for (;;) {
    Matrix x0 = Matrix::Identity(n, n) + 0.2 * random_matrix(n, n, rng);
    Matrix x1 = 0.2 * random_matrix(n, n, rng);
    bool ok = true;
    for (int i = 0; i <= 200 && ok; ++i) {
      const Matrix x = x0 + (i / 200.0) * x1;
      ok = Eigen::JacobiSVD<Matrix>(x).singularValues()(n - 1) >= 0.3;
    }
    if (ok) return {std::move(x0), std::move(x1)};
  }
}

/// A with `eps` times a random matrix added to the t^k coefficient, fanning on [0, 1].
inline PolynomialFrameCurve perturbed_curve(const PolynomialFrameCurve& a, double eps, Rng& rng,
                                            double max_condition = 1e4) {
  const Index rows = a.polynomial().rows();
  for (;;) {
    std::vector<Matrix> c(a.polynomial().coefficients().begin(), a.polynomial().coefficients().end());
    if (c.size() < static_cast<std::size_t>(a.k() + 1)) c.resize(static_cast<std::size_t>(a.k() + 1), Matrix::Zero(rows, a.n()));
    c[static_cast<std::size_t>(a.k())] += eps * random_matrix(rows, a.n(), rng);
    PolynomialFrameCurve b(a.k(), a.n(), std::move(c));
    if (fanning_on(b, 0.0, 1.0, max_condition)) return b;
  }
}

/// ODE curve with P_1 = 0 and affine P_2..P_k.
inline OdeFrameCurve random_normal_ode_curve(int k, int n, Rng& rng, double scale = 0.5) {
  std::vector<PolynomialMatrix> p;
  p.emplace_back(n, n, std::vector<Matrix>{Matrix::Zero(n, n)});
  for (int i = 2; i <= k; ++i) {
    p.emplace_back(n, n, std::vector<Matrix>{random_matrix(n, n, rng, scale), random_matrix(n, n, rng, scale)});
  }
  return {k, n, std::move(p), random_gl(static_cast<Index>(k) * n, rng, 1e2)};
}

}  // namespace fanning::testing
