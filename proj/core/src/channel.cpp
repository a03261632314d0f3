#include "gkplab/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gkplab {

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0) || !(eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in (0, 1]");
  }
}

}  // namespace

SegmentPlan SegmentPlan::split(double total_km, int mqr) {
  if (!(total_km >= 0.0)) throw std::invalid_argument("total_km must be non-negative");
  if (mqr < 0) throw std::invalid_argument("mqr must be non-negative");
  return SegmentPlan{total_km, mqr, total_km / (mqr + 1)};
}

double transmissivity(double distance_km, const FiberSpec& fiber) {
  if (!(distance_km >= 0.0)) throw std::invalid_argument("distance_km must be non-negative");
  if (!(fiber.attenuation_length_km > 0.0)) {
    throw std::invalid_argument("attenuation_length_km must be positive");
  }
  return std::exp(-distance_km / fiber.attenuation_length_km);
}

double loss_variance_update(double variance, double eta) {
  if (!(variance >= 0.0)) throw std::invalid_argument("variance must be non-negative");
  check_eta(eta);
  return eta * variance + 1.0 - eta;
}

double amp_gec_noise(double eta) {
  check_eta(eta);
  return (1.0 - eta) / eta;
}

double relay_gec_noise(double eta) {
  check_eta(eta);
  const double root = std::sqrt(eta);
  return (1.0 - root) / root;
}

}  // namespace gkplab
