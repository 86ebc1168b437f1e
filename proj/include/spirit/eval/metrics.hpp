#pragma once

#include <span>

namespace spirit {

struct EstimationResult;

/// Normalized absolute error between a true response and its estimate:
/// sum |I - Ihat| / sum I. The estimate may be raw (unnormalized, possibly
/// negative); throws ZeroIsrf when the truth has a non-positive sum.
double normalized_absolute_error(std::span<const double> truth,
                                 std::span<const double> estimate);

/// Mean squared window residual over the estimated wavelengths (edge-skipped
/// centers excluded); recomputes the aggregate from the per-wavelength
/// entries.
double mean_squared_residual(const EstimationResult& result);

/// Mean per-wavelength error, recomputed from the entries.
double mean_estimation_error(const EstimationResult& result);

}  // namespace spirit
