#include "spirit/forward/noise.hpp"

#include <cmath>
#include <numbers>

#include "spirit/common.hpp"

namespace spirit {

namespace {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

double gaussian_at(std::uint64_t seed, std::uint64_t index) {
  // Derive the substream state from (seed, index) and take one Box-Muller
  // draw from two 53-bit uniforms.
  std::uint64_t state = seed;
  std::uint64_t salt = splitmix64_next(state);
  state = salt ^ (index * 0xD1B54A32D192ED03ULL + 0x8BB84B93962EACC9ULL);
  const std::uint64_t a = splitmix64_next(state);
  const std::uint64_t b = splitmix64_next(state);
  const double u1 = 1.0 - static_cast<double>(a >> 11) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;        // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

MeasurementSet add_noise(const MeasurementSet& s, double snr_db, std::uint64_t seed) {
  require(!std::isnan(snr_db), Errc::ConfigError, "snr_db must not be NaN");
  MeasurementSet out = s;
  out.snr_db = snr_db;
  out.seed = seed;
  out.rng_name = kNoiseRngName;
  if (std::isinf(snr_db)) {
    out.sigma = 0.0;
    return out;
  }

  double power = 0.0;
  std::size_t n_valid = 0;
  for (std::size_t l = 0; l < s.values.size(); ++l) {
    if (!s.valid.empty() && s.valid[l] == 0) continue;
    power += s.values[l] * s.values[l];
    ++n_valid;
  }
  require(n_valid > 0, Errc::DomainTooSmall, "no valid samples to add noise to");
  power /= static_cast<double>(n_valid);

  out.sigma = std::sqrt(power * std::pow(10.0, -snr_db / 10.0));
  for (std::size_t l = 0; l < out.values.size(); ++l) {
    if (!out.valid.empty() && out.valid[l] == 0) continue;
    out.values[l] += out.sigma * gaussian_at(seed, l);
  }
  return out;
}

}  // namespace spirit
