#pragma once

#include <cstdint>

#include "spirit/forward/measurement.hpp"

namespace spirit {

/// Name of the noise generator recorded in measurement metadata.
inline constexpr const char* kNoiseRngName = "splitmix64+box-muller";

/// Standard normal draw for stream position (seed, index). Each index gets
/// an independent substream, so results do not depend on evaluation order.
double gaussian_at(std::uint64_t seed, std::uint64_t index);

/// Add i.i.d. zero-mean Gaussian noise to the valid entries at the requested
/// SNR (power ratio over the mean squared valid signal):
///   sigma = sqrt(mean(s^2) * 10^(-snr_db/10)).
/// An infinite snr_db is the no-noise sentinel and returns the input
/// unchanged (sigma 0). Deterministic given (seed); per-index substreams make
/// the result independent of any parallel evaluation order.
MeasurementSet add_noise(const MeasurementSet& s, double snr_db, std::uint64_t seed);

}  // namespace spirit
