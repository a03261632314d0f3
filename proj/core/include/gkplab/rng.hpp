#pragma once

#include <cmath>
#include <cstdint>

namespace gkplab {

/// Counter-based splittable random stream built on the SplitMix64 finalizer.
///
/// A stream is keyed by (seed, stream index). Monte Carlo loops key one
/// stream per trial, so the sequence a trial sees is independent of how
/// trials are partitioned across workers; tallies are therefore identical
/// for any worker count.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream) {
    state_ = mix(seed + 0x9e3779b97f4a7c15ull);
    state_ = mix(state_ ^ mix(stream + 0xbf58476d1ce4e5b9ull));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal deviate via Box-Muller. Draws come in cached pairs, so
  /// a stream consumes a fixed number of raw words per pair regardless of
  /// the values drawn.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gkplab
