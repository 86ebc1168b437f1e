#include "spirit/eval/metrics.hpp"

#include "spirit/common.hpp"
#include "spirit/eval/estimate.hpp"
#include "spirit/simd/kernels.hpp"

namespace spirit {

double normalized_absolute_error(std::span<const double> truth,
                                 std::span<const double> estimate) {
  require(truth.size() == estimate.size(), Errc::ConfigError,
          "truth and estimate lengths differ");
  const double mass = simd::sum(truth);
  require(mass > 0.0, Errc::ZeroIsrf, "truth response has non-positive sum");
  return simd::abs_diff_sum(truth, estimate) / mass;
}

double mean_squared_residual(const EstimationResult& result) {
  require(!result.entries.empty(), Errc::ConfigError, "no estimated wavelengths");
  double acc = 0.0;
  for (const auto& e : result.entries) acc += e.residual_sq;
  return acc / static_cast<double>(result.entries.size());
}

double mean_estimation_error(const EstimationResult& result) {
  require(!result.entries.empty(), Errc::ConfigError, "no estimated wavelengths");
  double acc = 0.0;
  for (const auto& e : result.entries) acc += e.error;
  return acc / static_cast<double>(result.entries.size());
}

}  // namespace spirit
