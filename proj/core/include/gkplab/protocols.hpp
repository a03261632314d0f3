#pragma once

#include <vector>

#include "gkplab/channel.hpp"
#include "gkplab/gkp_stats.hpp"

namespace gkplab {

/// One-way repeater station behaviour:
///  - amplify: teleportation-based error correction with amplification,
///    no post-selection (effective noise 2*variance + (1-eta)/eta);
///  - clip: same channel treatment plus post-selection on the syndromes;
///  - relay: the amplification is relayed half-way along the hop, so the
///    noise term becomes (1-sqrt(eta))/sqrt(eta); post-selection allowed.
enum class Protocol { amplify = 1, clip = 2, relay = 3 };

struct ProtocolConfig {
  Protocol variant = Protocol::amplify;
  int mqr = 1;
  SqueezingSpec squeezing;
  ClipPolicy clip;
  FiberSpec fiber;
};

/// Throws std::invalid_argument on out-of-range fields; in particular the
/// amplify variant requires mu_up = 0 (its acceptance probability is 1).
void validate_config(const ProtocolConfig& config);

struct StationError {
  double e_x = 0.0;
  double e_z = 0.0;
  double p_suc = 1.0;
};

struct KeyRatePoint {
  double total_km = 0.0;
  double e_ab_x = 0.0;
  double e_ab_z = 0.0;
  double p_suc_total = 1.0;
  double kappa = 0.0;
};

/// Logical X/Z error probability and acceptance probability of one station
/// for a hop of the given length. X and Z errors come from independent
/// quadratures with equal statistics, so e_x == e_z; each is the folded
/// (lattice-binned) misidentification probability of one syndrome at the
/// effective variance, and lies in [0, 1/2].
StationError station_error(const ProtocolConfig& config, double segment_km);

/// Error accumulated over mqr independent identical bit-flip stations:
/// (1/2) * (1 - (1 - 2 e_station)^mqr). Requires e_station in [0, 1/2].
double accumulate_errors(double e_station, int mqr);

/// Secret key rate kappa = max(0, p_suc_total * (1 - h(e_ab_x) - h(e_ab_z))).
double secret_key_rate(double e_ab_x, double e_ab_z, double p_suc_total);

/// Evaluates the chain at each total distance in `grid` (must be sorted
/// ascending). The hop length is total / (mqr + 1); accumulation and the
/// end-to-end acceptance product run over the mqr stations. mqr = 0 is the
/// direct-transmission extension: one hop, one terminal correction step.
/// Grid points are evaluated in parallel; output order follows the grid.
std::vector<KeyRatePoint> sweep_distance(const ProtocolConfig& config,
                                         const std::vector<double>& grid, int threads = 0);

KeyRatePoint evaluate_key_rate(const ProtocolConfig& config, double total_km);

/// Largest distance (0.01 km resolution, bisection) at which kappa exceeds
/// kappa_floor. Assumes kappa is non-increasing in distance. Throws
/// infeasible_error when kappa is already at or below the floor at L = 0.
double waterfall_distance(const ProtocolConfig& config, double kappa_floor = 1e-12);

}  // namespace gkplab
