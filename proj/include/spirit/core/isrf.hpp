#pragma once

#include <vector>

#include "spirit/common.hpp"

namespace spirit {

/// Sampled response on the offset grid, tagged with its center wavelength.
/// Non-negativity is enforced at ingestion (validate_response); estimates
/// produced by the coders may dip negative and are stored as-is.
struct Isrf {
  std::vector<double> values;
  double center = 0.0;
};

/// Scale values by one common factor so the discrete sum is 1 (unit DC gain
/// of the forward model). Idempotent bit-for-bit: re-normalizing the result
/// returns the identical vector. Throws ZeroIsrf for non-positive sums.
Isrf normalize(Isrf isrf);

/// Ingestion check: every sample >= 0 and at least one positive.
void validate_response(const Isrf& isrf);

}  // namespace spirit
