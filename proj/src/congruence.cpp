#include "fanning/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fanning/errors.hpp"
#include "fanning/linalg.hpp"

namespace fanning {

namespace {

// Column-major vec: vec(M X - X N) = (I (x) M - N^T (x) I) vec(X).
Matrix commutator_operator(const Matrix& m, const Matrix& nmat) {
  const Index n = m.rows();
  Matrix op = Matrix::Zero(n * n, n * n);
  for (Index c = 0; c < n; ++c) op.block(c * n, c * n, n, n) += m;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      op.block(r * n, c * n, n, n).diagonal().array() -= nmat(c, r);
    }
  }
  return op;
}

Matrix normalized(Matrix x) {
  const double norm = x.norm();
  if (norm > 0) x *= std::sqrt(static_cast<double>(x.rows())) / norm;
  if (x.trace() < 0) x = -x;
  return x;
}

double pair_weight(const Matrix& m, const Matrix& nmat) {
  return 1.0 / std::max({1.0, max_abs(m), max_abs(nmat)});
}

double pair_residual(const Matrix& m, const Matrix& nmat, const Matrix& x) {
  return pair_weight(m, nmat) * max_abs(m * x - x * nmat);
}

double conjugation_residual(std::span<const std::pair<Matrix, Matrix>> pairs, const Matrix& x) {
  double r = 0;
  for (const auto& [m, nmat] : pairs) r = std::max(r, pair_residual(m, nmat, x));
  return r;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::congruent:
      return "congruent";
    case Verdict::not_congruent:
      return "not_congruent";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ConjugatorSearch simultaneous_conjugator(std::span<const std::pair<Matrix, Matrix>> pairs,
                                         const ConjugatorOptions& options) {
  if (pairs.empty()) throw ShapeError("simultaneous_conjugator: at least one pair is required");
  const Index n = pairs.front().first.rows();
  for (const auto& [m, nmat] : pairs) {
    if (m.rows() != n || m.cols() != n || nmat.rows() != n || nmat.cols() != n) {
      throw ShapeError("simultaneous_conjugator: all matrices must be n x n");
    }
  }

  const Index nn = n * n;
  Matrix stacked(static_cast<Index>(pairs.size()) * nn, nn);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [m, nmat] = pairs[i];
    stacked.middleRows(static_cast<Index>(i) * nn, nn) = pair_weight(m, nmat) * commutator_operator(m, nmat);
  }
  const Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double threshold =
      std::max(options.rank_rtol * sigma(0), options.tol / std::sqrt(static_cast<double>(n)));
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) ++rank;
  }

  ConjugatorSearch out;
  out.nullity = nn - rank;
  // Best least-squares candidate, reported even when nothing qualifies.
  const Eigen::VectorXd least = svd.matrixV().col(nn - 1);
  out.X = normalized(Eigen::Map<const Matrix>(least.data(), n, n));
  out.condition = condition_number(out.X);
  out.residual = conjugation_residual(pairs, out.X);
  if (out.nullity == 0) return out;

  const Matrix basis = svd.matrixV().rightCols(out.nullity);
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  bool any_valid = false;
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    Eigen::VectorXd c(out.nullity);
    for (Index i = 0; i < out.nullity; ++i) c(i) = gauss(rng);
    const Eigen::VectorXd v = basis * c;
    const Matrix x = normalized(Eigen::Map<const Matrix>(v.data(), n, n));
    const double cond = condition_number(x);
    const double residual = conjugation_residual(pairs, x);
    if (residual > options.tol) continue;
    if (cond < options.max_condition) {
      out.status = ConjugatorSearch::Status::found;
      out.X = x;
      out.condition = cond;
      out.residual = residual;
      return out;
    }
    if (!any_valid || cond < out.condition) {
      any_valid = true;
      out.X = x;
      out.condition = cond;
      out.residual = residual;
    }
  }
  // Null vectors that all fail the residual bound mean the numerical null
  // space was spurious.
  out.status = any_valid ? ConjugatorSearch::Status::ill_conditioned : ConjugatorSearch::Status::none;
  return out;
}

std::vector<double> default_samples(int k, double start, double end) {
  const int count = 2 * k + 3;
  std::vector<double> s(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) s[static_cast<std::size_t>(i)] = start + (end - start) * i / (count - 1);
  return s;
}

CongruenceWitness are_congruent(const FrameCurve& a, const FrameCurve& b,
                                std::span<const double> samples,
                                const CongruenceOptions& options) {
  const int k = curve_k(a);
  const int n = curve_n(a);
  if (curve_k(b) != k || curve_n(b) != n) throw ShapeError("are_congruent: curves differ in k or n");
  if (samples.size() < 2) throw ShapeError("are_congruent: at least two samples are required");

  const NormalizationRecord ra = normal_frame(a, samples, options.normal_frame);
  const NormalizationRecord rb = normal_frame(b, samples, options.normal_frame);

  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < ra.Q[i].size(); ++j) pairs.emplace_back(ra.Q[i][j], rb.Q[i][j]);
  }
  const ConjugatorSearch search = simultaneous_conjugator(pairs, options.conjugator);

  CongruenceWitness w;
  w.samples.assign(samples.begin(), samples.end());
  w.X = search.X;
  w.conjugator_condition = search.condition;
  w.nullity = search.nullity;
  w.residuals.assign(samples.size(), 0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < ra.Q[i].size(); ++j) {
      w.residuals[i] = std::max(w.residuals[i], pair_residual(ra.Q[i][j], rb.Q[i][j], w.X));
    }
  }

  switch (search.status) {
    case ConjugatorSearch::Status::none:
      w.verdict = Verdict::not_congruent;
      return w;
    case ConjugatorSearch::Status::ill_conditioned:
      w.verdict = Verdict::inconclusive;
      return w;
    case ConjugatorSearch::Status::found:
      break;
  }

  // B_A X and B_B are normal frames with equal invariants, so T carries the
  // initial data of one onto the other.
  const Matrix lift_a = ra.normal_jets.front().juxtaposed().value() * block_diagonal(w.X, k);
  const Matrix lift_b = rb.normal_jets.front().juxtaposed().value();
  w.T = lift_b * Eigen::PartialPivLU<Matrix>(lift_a).inverse();

  bool spans_match = true;
  w.span_distances.resize(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = subspace_distance(w.T * ra.B[i], rb.B[i]);
    w.span_distances[i] = d;
    w.residuals[i] = std::max(w.residuals[i], d);
    if (!(d < options.conjugator.tol)) spans_match = false;
  }
  w.verdict = spans_match ? Verdict::congruent : Verdict::not_congruent;
  return w;
}

CanonicalJet canonicalize_jet(const FrameJet& frame) {
  frame.require_fanning();
  frame.require_order(frame.k() + 1, "canonicalize_jet");
  const FrameJet normal = normalize_jet(frame);
  const Matrix lift = normal.juxtaposed().value();
  const double cond = condition_number(lift);
  if (!(cond <= kDefaultMaxCondition)) {
    throw NotFanningError("canonicalize_jet: normalized lift is singular", cond, frame.base_time());
  }
  Matrix t = Eigen::PartialPivLU<Matrix>(lift).inverse();
  FrameJet standard = left_act(t, normal);
  return {std::move(standard), std::move(t)};
}

OrbitCoordinates orbit_coordinates(const FrameJet& frame) {
  const int k = frame.k();
  const CanonicalJet canon = canonicalize_jet(frame);
  const CoefficientSet c = ode_coefficients(canon.standard);
  OrbitCoordinates out;
  out.base_time = frame.base_time();
  out.entries.push_back((k - 1.0) * c.P(2).value());
  for (int i = 2; i <= k - 1; ++i) {
    out.entries.push_back(binomial(k - 1, i) * (c.P(i + 1).value() - c.P(i).deriv(1)));
  }
  return out;
}

}  // namespace fanning
