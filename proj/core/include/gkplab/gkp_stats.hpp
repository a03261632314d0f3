#pragma once

namespace gkplab {

inline constexpr double kSqrtPi = 1.7724538509055160273;
/// Half a lattice spacing: the decision boundary between adjacent GKP bins.
inline constexpr double kHalfBin = kSqrtPi / 2.0;

/// Squeezing carried in both conventions at once: decibels and quadrature
/// variance (vacuum = 1), related by variance = 10^(-db/10).
struct SqueezingSpec {
  double db = 0.0;
  double variance = 1.0;

  static SqueezingSpec from_db(double db);
  static SqueezingSpec from_variance(double variance);
};

/// Converts squeezing in dB to quadrature variance: 10^(-db/10).
double db_to_variance(double db);
double variance_to_db(double variance);

/// Post-selection window for syndrome binning. Outcomes closer than mu_up to
/// a bin boundary are discarded; mu_up = 0 disables post-selection entirely.
/// Valid range: 0 <= mu_up < sqrt(pi)/2.
struct ClipPolicy {
  double mu_up = 0.0;
};

/// Truncation control for the lattice sums. max_abs_n = 0 selects an
/// automatic bound, max(3, ceil(6*sqrt(variance)/sqrt(pi)) + 2), which covers
/// the Gaussian out to 12 sigma; terms below term_tol stop the sum early.
struct LatticeSumConfig {
  int max_abs_n = 0;
  double term_tol = 1e-18;
};

/// Probability that a Gaussian shift of the given variance falls outside the
/// central bin (-sqrt(pi)/2, sqrt(pi)/2) -- the bit misidentification
/// probability of a single homodyne readout without lattice folding.
///
/// Contrast with clip_conditional_error(variance, {0}, ...), which folds the
/// whole lattice and therefore saturates at 1/2 rather than 1 for large
/// variance. Both notions are exposed; callers choose explicitly.
double misid_probability(double variance);

/// Probability mass in the correct-readout windows
///   [(4n-1)sqrt(pi)/2 + mu_up, (4n+1)sqrt(pi)/2 - mu_up],  n in Z
/// for a centred Gaussian of the given variance (windows of half-width
/// sqrt(pi)/2 - mu_up around even lattice multiples).
double clip_correct(double variance, const ClipPolicy& policy,
                    const LatticeSumConfig& cfg = {});

/// Probability mass in the incorrect-readout windows
///   [(4n+1)sqrt(pi)/2 + mu_up, (4n+3)sqrt(pi)/2 - mu_up],  n in Z
/// (windows around odd lattice multiples).
double clip_incorrect(double variance, const ClipPolicy& policy,
                      const LatticeSumConfig& cfg = {});

/// Post-selection success probability: clip_correct + clip_incorrect under
/// the same truncation. Equals 1 (to 1e-10) at mu_up = 0.
double clip_success(double variance, const ClipPolicy& policy,
                    const LatticeSumConfig& cfg = {});

/// Conditional error after post-selection:
///   E = clip_incorrect / (clip_correct + clip_incorrect).
/// Throws infeasible_error when the acceptance probability underflows to 0
/// (degenerate policy).
double clip_conditional_error(double variance, const ClipPolicy& policy,
                              const LatticeSumConfig& cfg = {});

/// Binary entropy h(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 := 0.
/// Rejects p outside [0, 1].
double binary_entropy(double p);

}  // namespace gkplab
