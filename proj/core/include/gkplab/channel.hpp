#pragma once

namespace gkplab {

/// Fibre with exponential loss: eta = exp(-L / attenuation_length_km).
struct FiberSpec {
  double attenuation_length_km = 22.0;
};

/// Equal-hop division of a total distance among mqr repeater stations:
/// mqr + 1 hops (sender -> R1 -> ... -> R_mqr -> receiver).
struct SegmentPlan {
  double total_km = 0.0;
  int mqr = 0;
  double segment_km = 0.0;

  static SegmentPlan split(double total_km, int mqr);
};

/// Fibre transmissivity over a distance, eta in (0, 1].
double transmissivity(double distance_km, const FiberSpec& fiber = {});

/// Quadrature variance after a loss channel of transmissivity eta:
/// eta * variance + 1 - eta. The vacuum (variance 1) is a fixed point.
double loss_variance_update(double variance, double eta);

/// Added Gaussian noise variance of loss followed by amplification back to
/// unit gain: (1 - eta) / eta.
double amp_gec_noise(double eta);

/// Added noise when the amplification is relayed half-way along the segment,
/// so the resource state sees effective transmissivity sqrt(eta):
/// (1 - sqrt(eta)) / sqrt(eta). Roughly half of amp_gec_noise near eta = 1.
double relay_gec_noise(double eta);

}  // namespace gkplab
