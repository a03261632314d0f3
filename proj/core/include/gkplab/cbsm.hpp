#pragma once

#include <vector>

#include "gkplab/channel.hpp"
#include "gkplab/gkp_stats.hpp"

namespace gkplab {

/// Concatenation shape: n blocks, m physical measurements per block, and the
/// failure-tolerance index j (0 <= j <= m) entering the elementary success
/// and letter-failure formulas.
struct ParityCode {
  int n = 1;
  int m = 1;
  int j = 0;
};

void validate_code(const ParityCode& code);

/// Loss budget of one repeater link: in-station efficiency eta0 and the
/// travelling qubit's efficiency eta_l0 = eta0 * exp(-l0/L_att).
struct LinkBudget {
  double eta0 = 1.0;
  double l0_km = 1.0;
  FiberSpec fiber;

  double eta_l0() const;
};

enum class Detector { homodyne_clip, pnrd };

struct CbsmPerformance {
  double p_s = 0.0;        // elementary per-block success
  double p_f = 0.0;        // letter-failure probability
  double p_link = 0.0;     // one-link concatenated success
  double rate = 0.0;       // end-to-end success over the full distance
  double rc = 0.0;         // resource cost in physical qubits
  double e_logical = 0.0;  // logical X(Z) error probability
};

/// Elementary success of one block:
///   p_s = clip_success(2 * variance, clip)^j * (eta0 * eta_l0)^m.
double elementary_success(const LinkBudget& link, const ParityCode& code,
                          const SqueezingSpec& squeezing, const ClipPolicy& clip);

/// Letter-failure probability, the literal truncated sum
///   p_f = sum_{k=m-j}^{m} (1/2)^(m-k) (1 - eta_prod)^k.
/// Throws std::out_of_range if the sum exceeds 1 (possible far outside the
/// intended efficiency regime).
double letter_failure(double eta_prod, const ParityCode& code);

/// Concatenated link success P = (1 - p_f)^n - (1 - p_s - p_f)^n.
/// Rejects p_s + p_f > 1.
double cbsm_success(double p_s, double p_f, int n);

/// End-to-end success over total_km with hops of l0_km:
/// p_link^(L/L0). Distances below one hop count as a single hop.
double end_to_end_rate(double p_link, double total_km, double l0_km);

/// Qubit cost of delivering one logical qubit: (2nm / rate) * (L / L0),
/// with the same single-hop floor on L / L0. Rejects rate <= 0.
double resource_cost(const ParityCode& code, double rate, double total_km, double l0_km);

/// Logical X(Z) error of an m-fold physical repetition. Each physical
/// measurement misreads with e_phys = 1 - (1 - e1)^2, where e1 is the
/// per-quadrature folded misidentification at variance (noisy ? 2 : 1) *
/// variance, post-selected when mu_up > 0; the m repetitions compound to
/// 1 - (1 - e_phys)^m.
double logical_error(const SqueezingSpec& squeezing, int m, const ClipPolicy& clip,
                     bool noisy);

/// No-cloning feasibility of photon-counting measurements: eta0 * eta_l0
/// must exceed 1/2.
bool pnrd_feasible(double eta0, double eta_l0);

/// Full performance bundle for one parameter point. The pnrd detector drops
/// the post-selection factors (its success has no clipping stage) and throws
/// infeasible_error below the no-cloning bound.
CbsmPerformance evaluate_cbsm(const ParityCode& code, const LinkBudget& link,
                              double total_km, const SqueezingSpec& squeezing,
                              const ClipPolicy& clip, Detector detector);

struct SearchSpace {
  std::vector<int> j_set;
  int m_min = 1;
  int m_max = 1;
  int n_min = 1;
  int n_max = 1;
  double l0_min_km = 1.0;
  double l0_max_km = 1.0;
  double l0_step_km = 0.01;
};

struct OptimizerParams {
  int n = 0;
  int m = 0;
  int j = 0;
  double l0_km = 0.0;
};

struct TracePoint {
  OptimizerParams params;
  CbsmPerformance performance;
};

struct OptimizerResult {
  OptimizerParams params;
  CbsmPerformance performance;
  std::vector<TracePoint> trace;  // filled only when requested
};

/// Exhaustive grid search minimising rc over the space. Ties break
/// lexicographically on (rc, n, m, j, l0), so the result is independent of
/// enumeration order and of the worker count. Points that are infeasible
/// (pnrd bound, vanishing rate, out-of-range letter failure) are skipped;
/// if nothing survives, throws infeasible_error.
OptimizerResult optimize_resource_cost(const SearchSpace& space, double total_km,
                                       double eta0, const FiberSpec& fiber,
                                       const SqueezingSpec& squeezing,
                                       const ClipPolicy& clip, Detector detector,
                                       bool want_trace = false, int threads = 0);

}  // namespace gkplab
