#include "gkplab/gkp_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "gkplab/errors.hpp"

namespace gkplab {

namespace {

// Below this variance the Gaussian is numerically a point mass at 0 and the
// limiting probabilities are returned directly instead of evaluating erfc at
// huge arguments.
constexpr double kDegenerateVariance = 1e-15;

void check_variance(double variance) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("variance must be positive and finite");
  }
}

void check_policy(const ClipPolicy& policy) {
  if (!(policy.mu_up >= 0.0) || !(policy.mu_up < kHalfBin)) {
    throw std::invalid_argument("mu_up must satisfy 0 <= mu_up < sqrt(pi)/2");
  }
}

int resolve_max_n(double variance, const LatticeSumConfig& cfg) {
  if (cfg.max_abs_n > 0) return cfg.max_abs_n;
  const int auto_n = static_cast<int>(std::ceil(6.0 * std::sqrt(variance) / kSqrtPi)) + 2;
  return auto_n < 3 ? 3 : auto_n;
}

// Mass of N(0, variance) in [a, b] with 0 <= a < b, via complementary error
// function differences (accurate deep in the tail).
double tail_window_mass(double a, double b, double inv_s) {
  return 0.5 * (std::erfc(a * inv_s) - std::erfc(b * inv_s));
}

}  // namespace

SqueezingSpec SqueezingSpec::from_db(double db) {
  if (!std::isfinite(db)) throw std::invalid_argument("squeezing dB must be finite");
  if (db < 0.0) throw std::invalid_argument("squeezing dB must be non-negative");
  return SqueezingSpec{db, db_to_variance(db)};
}

SqueezingSpec SqueezingSpec::from_variance(double variance) {
  check_variance(variance);
  return SqueezingSpec{variance_to_db(variance), variance};
}

double db_to_variance(double db) {
  if (!std::isfinite(db)) throw std::invalid_argument("squeezing dB must be finite");
  return std::pow(10.0, -db / 10.0);
}

double variance_to_db(double variance) {
  check_variance(variance);
  return -10.0 * std::log10(variance);
}

double misid_probability(double variance) {
  check_variance(variance);
  if (variance < kDegenerateVariance) return 0.0;
  return std::erfc(kHalfBin / std::sqrt(2.0 * variance));
}

double clip_correct(double variance, const ClipPolicy& policy, const LatticeSumConfig& cfg) {
  check_variance(variance);
  check_policy(policy);
  if (variance < kDegenerateVariance) return 1.0;  // all mass in the central window

  const double inv_s = 1.0 / std::sqrt(2.0 * variance);
  const double mu = policy.mu_up;
  // Central window [-(kHalfBin - mu), kHalfBin - mu].
  double sum = std::erf((kHalfBin - mu) * inv_s);
  const int max_n = resolve_max_n(variance, cfg);
  for (int n = 1; n <= max_n; ++n) {
    const double a = (4.0 * n - 1.0) * kHalfBin + mu;
    const double b = (4.0 * n + 1.0) * kHalfBin - mu;
    // Window n and its mirror image -n carry equal mass (even integrand).
    const double term = 2.0 * tail_window_mass(a, b, inv_s);
    sum += term;
    if (term < cfg.term_tol) break;
  }
  return sum;
}

double clip_incorrect(double variance, const ClipPolicy& policy, const LatticeSumConfig& cfg) {
  check_variance(variance);
  check_policy(policy);
  if (variance < kDegenerateVariance) return 0.0;

  const double inv_s = 1.0 / std::sqrt(2.0 * variance);
  const double mu = policy.mu_up;
  double sum = 0.0;
  const int max_n = resolve_max_n(variance, cfg);
  // Window n >= 0 pairs with window -(n+1) on the negative axis.
  for (int n = 0; n <= max_n; ++n) {
    const double a = (4.0 * n + 1.0) * kHalfBin + mu;
    const double b = (4.0 * n + 3.0) * kHalfBin - mu;
    const double term = 2.0 * tail_window_mass(a, b, inv_s);
    sum += term;
    if (term < cfg.term_tol) break;
  }
  return sum;
}

double clip_success(double variance, const ClipPolicy& policy, const LatticeSumConfig& cfg) {
  return clip_correct(variance, policy, cfg) + clip_incorrect(variance, policy, cfg);
}

double clip_conditional_error(double variance, const ClipPolicy& policy,
                              const LatticeSumConfig& cfg) {
  const double correct = clip_correct(variance, policy, cfg);
  const double incorrect = clip_incorrect(variance, policy, cfg);
  const double accepted = correct + incorrect;
  if (accepted <= 0.0) {
    throw infeasible_error("degenerate clip policy: acceptance probability underflows to 0");
  }
  return incorrect / accepted;
}

double binary_entropy(double p) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument("binary_entropy requires p in [0, 1]");
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace gkplab
