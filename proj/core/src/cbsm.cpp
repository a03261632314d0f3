#include "gkplab/cbsm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "gkplab/errors.hpp"
#include "gkplab/parallel.hpp"

namespace gkplab {

void validate_code(const ParityCode& code) {
  if (code.n < 1) throw std::invalid_argument("block count n must be >= 1");
  if (code.m < 1) throw std::invalid_argument("physical count m must be >= 1");
  if (code.j < 0 || code.j > code.m) {
    throw std::invalid_argument("failure tolerance j must satisfy 0 <= j <= m");
  }
}

double LinkBudget::eta_l0() const { return eta0 * transmissivity(l0_km, fiber); }

namespace {

void validate_link(const LinkBudget& link) {
  if (!(link.eta0 > 0.0) || !(link.eta0 <= 1.0)) {
    throw std::invalid_argument("eta0 must lie in (0, 1]");
  }
  if (!(link.l0_km > 0.0)) throw std::invalid_argument("l0_km must be positive");
}

double hop_count(double total_km, double l0_km) {
  if (!(l0_km > 0.0)) throw std::invalid_argument("l0_km must be positive");
  if (!(total_km >= 0.0)) throw std::invalid_argument("total_km must be non-negative");
  // Distances below one hop run as a single hop.
  return std::max(1.0, total_km / l0_km);
}

}  // namespace

double elementary_success(const LinkBudget& link, const ParityCode& code,
                          const SqueezingSpec& squeezing, const ClipPolicy& clip) {
  validate_code(code);
  validate_link(link);
  const double eta_prod = link.eta0 * link.eta_l0();
  const double p_suc = clip_success(2.0 * squeezing.variance, clip);
  return std::pow(p_suc, code.j) * std::pow(eta_prod, code.m);
}

double letter_failure(double eta_prod, const ParityCode& code) {
  validate_code(code);
  if (!(eta_prod >= 0.0) || !(eta_prod <= 1.0)) {
    throw std::invalid_argument("eta_prod must lie in [0, 1]");
  }
  double sum = 0.0;
  for (int k = code.m - code.j; k <= code.m; ++k) {
    sum += std::pow(0.5, code.m - k) * std::pow(1.0 - eta_prod, k);
  }
  if (sum > 1.0) {
    throw std::out_of_range("letter-failure sum exceeds 1 outside the supported regime");
  }
  return sum;
}

double cbsm_success(double p_s, double p_f, int n) {
  if (n < 1) throw std::invalid_argument("block count n must be >= 1");
  if (!(p_s >= 0.0) || !(p_s <= 1.0) || !(p_f >= 0.0) || !(p_f <= 1.0)) {
    throw std::invalid_argument("p_s and p_f must be probabilities");
  }
  if (p_s + p_f > 1.0) throw std::invalid_argument("p_s + p_f must not exceed 1");
  return std::pow(1.0 - p_f, n) - std::pow(1.0 - p_s - p_f, n);
}

double end_to_end_rate(double p_link, double total_km, double l0_km) {
  if (!(p_link >= 0.0) || !(p_link <= 1.0)) {
    throw std::invalid_argument("p_link must lie in [0, 1]");
  }
  return std::pow(p_link, hop_count(total_km, l0_km));
}

double resource_cost(const ParityCode& code, double rate, double total_km, double l0_km) {
  validate_code(code);
  if (!(rate > 0.0) || !(rate <= 1.0)) {
    throw std::invalid_argument("rate must lie in (0, 1]");
  }
  return 2.0 * code.n * code.m / rate * hop_count(total_km, l0_km);
}

double logical_error(const SqueezingSpec& squeezing, int m, const ClipPolicy& clip,
                     bool noisy) {
  if (m < 1) throw std::invalid_argument("physical count m must be >= 1");
  const double v = (noisy ? 2.0 : 1.0) * squeezing.variance;
  const double e1 = clip_conditional_error(v, clip);
  const double e_phys = 1.0 - (1.0 - e1) * (1.0 - e1);
  return 1.0 - std::pow(1.0 - e_phys, m);
}

bool pnrd_feasible(double eta0, double eta_l0) {
  if (!(eta0 >= 0.0) || !(eta0 <= 1.0) || !(eta_l0 >= 0.0) || !(eta_l0 <= 1.0)) {
    throw std::invalid_argument("efficiencies must lie in [0, 1]");
  }
  return eta0 * eta_l0 > 0.5;
}

CbsmPerformance evaluate_cbsm(const ParityCode& code, const LinkBudget& link,
                              double total_km, const SqueezingSpec& squeezing,
                              const ClipPolicy& clip, Detector detector) {
  validate_code(code);
  validate_link(link);
  const double eta_l0 = link.eta_l0();
  const double eta_prod = link.eta0 * eta_l0;

  const bool pnrd = detector == Detector::pnrd;
  if (pnrd && !pnrd_feasible(link.eta0, eta_l0)) {
    throw infeasible_error("pnrd detection infeasible: eta0 * eta_l0 <= 1/2");
  }
  const ClipPolicy effective_clip = pnrd ? ClipPolicy{0.0} : clip;
  const double p_suc = pnrd ? 1.0 : clip_success(2.0 * squeezing.variance, clip);

  CbsmPerformance perf;
  perf.p_s = std::pow(p_suc, code.j) * std::pow(eta_prod, code.m);
  perf.p_f = letter_failure(eta_prod, code);
  perf.p_link = cbsm_success(perf.p_s, perf.p_f, code.n);
  perf.rate = end_to_end_rate(perf.p_link, total_km, link.l0_km);
  perf.rc = resource_cost(code, perf.rate, total_km, link.l0_km);
  perf.e_logical = logical_error(squeezing, code.m, effective_clip, /*noisy=*/true);
  return perf;
}

namespace {

struct GridPoint {
  int n, m, j;
  double l0;
};

struct BestEntry {
  bool valid = false;
  double rc = 0.0;
  GridPoint point{};
  CbsmPerformance perf{};

  // Lexicographic (rc, n, m, j, l0): total order over distinct grid points.
  bool better_than(const BestEntry& other) const {
    if (!other.valid) return valid;
    if (!valid) return false;
    if (rc != other.rc) return rc < other.rc;
    if (point.n != other.point.n) return point.n < other.point.n;
    if (point.m != other.point.m) return point.m < other.point.m;
    if (point.j != other.point.j) return point.j < other.point.j;
    return point.l0 < other.point.l0;
  }
};

}  // namespace

OptimizerResult optimize_resource_cost(const SearchSpace& space, double total_km,
                                       double eta0, const FiberSpec& fiber,
                                       const SqueezingSpec& squeezing,
                                       const ClipPolicy& clip, Detector detector,
                                       bool want_trace, int threads) {
  if (space.j_set.empty()) throw std::invalid_argument("j_set must be non-empty");
  if (space.m_min < 1 || space.m_max < space.m_min) {
    throw std::invalid_argument("invalid m range");
  }
  if (space.n_min < 1 || space.n_max < space.n_min) {
    throw std::invalid_argument("invalid n range");
  }
  if (!(space.l0_step_km > 0.0) || !(space.l0_min_km > 0.0) ||
      space.l0_max_km < space.l0_min_km) {
    throw std::invalid_argument("invalid l0 grid");
  }

  std::vector<double> l0_values;
  const int steps =
      static_cast<int>(std::floor((space.l0_max_km - space.l0_min_km) / space.l0_step_km + 1e-9));
  l0_values.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) l0_values.push_back(space.l0_min_km + i * space.l0_step_km);

  std::vector<GridPoint> grid;
  for (const int j : space.j_set) {
    for (int m = space.m_min; m <= space.m_max; ++m) {
      if (j < 0 || j > m) continue;
      for (int n = space.n_min; n <= space.n_max; ++n) {
        for (const double l0 : l0_values) {
          grid.push_back(GridPoint{n, m, j, l0});
        }
      }
    }
  }
  if (grid.empty()) throw std::invalid_argument("empty search space");

  const int workers = resolve_worker_count(threads);
  std::vector<BestEntry> evaluated(want_trace ? grid.size() : 0);
  std::vector<BestEntry> best_per_chunk(static_cast<std::size_t>(workers));

  std::atomic<std::size_t> chunk_counter{0};
  parallel_chunks(grid.size(), workers, [&](std::size_t begin, std::size_t end) {
    BestEntry local;
    for (std::size_t i = begin; i < end; ++i) {
      const GridPoint& gp = grid[i];
      BestEntry entry;
      try {
        const CbsmPerformance perf =
            evaluate_cbsm(ParityCode{gp.n, gp.m, gp.j}, LinkBudget{eta0, gp.l0, fiber},
                          total_km, squeezing, clip, detector);
        if (perf.rate > 0.0 && std::isfinite(perf.rc)) {
          entry = BestEntry{true, perf.rc, gp, perf};
        }
      } catch (const infeasible_error&) {
      } catch (const std::out_of_range&) {
      } catch (const std::invalid_argument&) {
        // Vanishing rate at this point; skip it.
      }
      if (want_trace) evaluated[i] = entry;
      if (entry.better_than(local)) local = entry;
    }
    best_per_chunk[chunk_counter.fetch_add(1)] = local;
  });

  BestEntry best;
  for (const BestEntry& candidate : best_per_chunk) {
    if (candidate.better_than(best)) best = candidate;
  }
  if (!best.valid) throw infeasible_error("no feasible point in the search space");

  OptimizerResult result;
  result.params = OptimizerParams{best.point.n, best.point.m, best.point.j, best.point.l0};
  result.performance = best.perf;
  if (want_trace) {
    result.trace.reserve(evaluated.size());
    for (const BestEntry& entry : evaluated) {
      if (!entry.valid) continue;
      result.trace.push_back(TracePoint{
          OptimizerParams{entry.point.n, entry.point.m, entry.point.j, entry.point.l0},
          entry.perf});
    }
  }
  return result;
}

}  // namespace gkplab
