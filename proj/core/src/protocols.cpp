#include "gkplab/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkplab/errors.hpp"
#include "gkplab/parallel.hpp"

namespace gkplab {

void validate_config(const ProtocolConfig& config) {
  if (config.variant != Protocol::amplify && config.variant != Protocol::clip &&
      config.variant != Protocol::relay) {
    throw std::invalid_argument("unknown protocol variant");
  }
  if (config.mqr < 0) throw std::invalid_argument("mqr must be non-negative");
  if (!(config.squeezing.variance > 0.0)) {
    throw std::invalid_argument("squeezing variance must be positive");
  }
  if (!(config.clip.mu_up >= 0.0) || !(config.clip.mu_up < kHalfBin)) {
    throw std::invalid_argument("mu_up must satisfy 0 <= mu_up < sqrt(pi)/2");
  }
  if (config.variant == Protocol::amplify && config.clip.mu_up != 0.0) {
    throw std::invalid_argument("the amplify variant does not post-select: mu_up must be 0");
  }
}

StationError station_error(const ProtocolConfig& config, double segment_km) {
  validate_config(config);
  if (!(segment_km >= 0.0)) throw std::invalid_argument("segment_km must be non-negative");

  const double eta = transmissivity(segment_km, config.fiber);
  const double added =
      config.variant == Protocol::relay ? relay_gec_noise(eta) : amp_gec_noise(eta);
  // Two finitely squeezed ancilla modes feed the correction, hence 2*variance.
  const double effective = 2.0 * config.squeezing.variance + added;

  const ClipPolicy policy =
      config.variant == Protocol::amplify ? ClipPolicy{0.0} : config.clip;
  const double e = clip_conditional_error(effective, policy);
  const double p_suc =
      config.variant == Protocol::amplify ? 1.0 : clip_success(effective, policy);
  return StationError{e, e, p_suc};
}

double accumulate_errors(double e_station, int mqr) {
  if (!(e_station >= 0.0) || !(e_station <= 0.5)) {
    throw std::invalid_argument("e_station must lie in [0, 1/2]");
  }
  if (mqr < 1) throw std::invalid_argument("mqr must be at least 1");
  return 0.5 * (1.0 - std::pow(1.0 - 2.0 * e_station, mqr));
}

double secret_key_rate(double e_ab_x, double e_ab_z, double p_suc_total) {
  if (!(p_suc_total >= 0.0) || !(p_suc_total <= 1.0)) {
    throw std::invalid_argument("p_suc_total must lie in [0, 1]");
  }
  const double kappa =
      p_suc_total * (1.0 - binary_entropy(e_ab_x) - binary_entropy(e_ab_z));
  return std::max(0.0, kappa);
}

KeyRatePoint evaluate_key_rate(const ProtocolConfig& config, double total_km) {
  const SegmentPlan plan = SegmentPlan::split(total_km, config.mqr);
  const StationError station = station_error(config, plan.segment_km);
  // mqr = 0: single hop terminated by one correction step at the receiver.
  const int events = std::max(1, config.mqr);
  const double e_ab = accumulate_errors(station.e_x, events);
  const double p_total = std::pow(station.p_suc, events);
  const double kappa = secret_key_rate(e_ab, e_ab, p_total);
  return KeyRatePoint{total_km, e_ab, e_ab, p_total, kappa};
}

std::vector<KeyRatePoint> sweep_distance(const ProtocolConfig& config,
                                         const std::vector<double>& grid, int threads) {
  validate_config(config);
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("distance grid must be sorted ascending");
  }
  std::vector<KeyRatePoint> out(grid.size());
  parallel_for(grid.size(), resolve_worker_count(threads),
               [&](std::size_t i) { out[i] = evaluate_key_rate(config, grid[i]); });
  return out;
}

double waterfall_distance(const ProtocolConfig& config, double kappa_floor) {
  validate_config(config);
  if (!(kappa_floor >= 0.0)) throw std::invalid_argument("kappa_floor must be non-negative");
  if (evaluate_key_rate(config, 0.0).kappa <= kappa_floor) {
    throw infeasible_error("no positive key rate at distance 0");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (evaluate_key_rate(config, hi).kappa > kappa_floor) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e7) throw infeasible_error("key rate did not collapse below 1e7 km");
  }
  while (hi - lo > 0.01) {
    const double mid = 0.5 * (lo + hi);
    if (evaluate_key_rate(config, mid).kappa > kappa_floor) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace gkplab
