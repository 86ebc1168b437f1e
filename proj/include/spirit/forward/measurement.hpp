#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace spirit {

/// Measured (or synthesized) spectrum sampled at the grid centers. Entries
/// whose ISRF span is not fully covered by the reference domain are marked
/// invalid and skipped by estimation. Noise parameters are carried along for
/// reproducibility.
struct MeasurementSet {
  std::vector<double> values;   // one per grid center
  std::vector<std::uint8_t> valid;
  double snr_db = std::numeric_limits<double>::infinity();
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::string rng_name;         // set by add_noise

  std::size_t size() const { return values.size(); }
};

}  // namespace spirit
