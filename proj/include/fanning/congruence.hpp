#pragma once

// Congruence of fanning curves under GL(kn): two curves are congruent iff the
// invariants kappa, h_j of their normal frames are conjugate by one constant
// invertible n x n matrix. Also: canonical (standard) representatives of jets
// and orbit coordinates of (k+1)-jets.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fanning/curves.hpp"
#include "fanning/invariants.hpp"

namespace fanning {

struct ConjugatorOptions {
  double tol = 1e-7;              // bound on |M_i X - X N_i| / max(1, |M_i|, |N_i|) with |X|_F = sqrt(n)
  double rank_rtol = 1e-9;        // singular values <= rank_rtol * sigma_max are null
  double max_condition = 1e8;     // candidates at or above this are ill-conditioned
  int attempts = 20;
  std::uint64_t seed = 42;
};

struct ConjugatorSearch {
  enum class Status { found, none, ill_conditioned };
  Status status = Status::none;
  Matrix X;              // valid when status == found (normalized to |X|_F = sqrt(n), tr X >= 0)
  Index nullity = 0;     // dimension of the numerical solution space
  double condition = 0;  // of the returned (or best rejected) candidate
  double residual = 0;   // max over pairs of max|M_i X - X N_i| / max(1, |M_i|, |N_i|)
};

/// Finds an invertible X with M_i X = X N_i for every pair simultaneously, from
/// the null space of the stacked operators X -> M_i X - X N_i, each scaled by
/// 1 / max(1, |M_i|, |N_i|). Random combinations of null vectors are drawn
/// from a generator seeded with options.seed. An empty result is a valid
/// outcome, not an error.
ConjugatorSearch simultaneous_conjugator(std::span<const std::pair<Matrix, Matrix>> pairs,
                                         const ConjugatorOptions& options = {});

enum class Verdict { congruent, not_congruent, inconclusive };

const char* to_string(Verdict v);

struct CongruenceOptions {
  ConjugatorOptions conjugator{};
  NormalFrameOptions normal_frame{};
};

struct CongruenceWitness {
  Verdict verdict = Verdict::not_congruent;
  Matrix X;                              // constant conjugator of the normal-frame invariants
  Matrix T;                              // ambient transformation with T A ~ B
  std::vector<double> samples;
  std::vector<double> residuals;         // per sample: max of conjugation residual and span distance
  std::vector<double> span_distances;    // sin of the largest principal angle of span(T A), span(B)
  double conjugator_condition = 0;
  Index nullity = 0;
};

/// Samples must be strictly increasing with at least two entries; both curves
/// must share k and n and be fanning at every sample.
CongruenceWitness are_congruent(const FrameCurve& a, const FrameCurve& b,
                                std::span<const double> samples,
                                const CongruenceOptions& options = {});

/// 2k+3 equispaced samples on [start, end].
std::vector<double> default_samples(int k, double start, double end);

struct CanonicalJet {
  FrameJet standard;  // normal, frame (e_1..e_n), derivatives A^(j) = E_j for j <= k-1
  Matrix T;           // standard = T * normalize_jet(original)
};

/// Requires a fanning jet of order >= k+1.
CanonicalJet canonicalize_jet(const FrameJet& frame);

struct OrbitCoordinates {
  double base_time = 0;
  /// ((k-1) kappa, C(k-1,2)(h_1 - kappa'), ..., (h_{k-2} - h'_{k-3})), n x n each.
  std::vector<Matrix> entries;
};

/// Canonicalizes internally, then reads the entries of the Jacobi matrix.
OrbitCoordinates orbit_coordinates(const FrameJet& frame);

}  // namespace fanning
