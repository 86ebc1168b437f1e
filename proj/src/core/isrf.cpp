#include "spirit/core/isrf.hpp"

#include <cmath>

#include "spirit/simd/kernels.hpp"

namespace spirit {

Isrf normalize(Isrf isrf) {
  double s = simd::sum(isrf.values);
  require(std::isfinite(s), Errc::ZeroIsrf, "ISRF sum is not finite");
  require(s > 0.0, Errc::ZeroIsrf, "ISRF has non-positive sum");
  // Rescale while |sum - 1| strictly improves. Stopping on non-improvement
  // makes the result an exact fixed point: re-normalizing recomputes the
  // same rejected candidate and stops immediately, bit-for-bit.
  double gap = std::fabs(s - 1.0);
  for (int pass = 0; pass < 64 && gap != 0.0; ++pass) {
    std::vector<double> scaled = isrf.values;
    simd::scal(1.0 / s, scaled);
    const double s_next = simd::sum(scaled);
    const double gap_next = std::fabs(s_next - 1.0);
    if (gap_next >= gap) break;
    isrf.values = std::move(scaled);
    s = s_next;
    gap = gap_next;
  }
  return isrf;
}

void validate_response(const Isrf& isrf) {
  require(!isrf.values.empty(), Errc::ZeroIsrf, "empty ISRF");
  bool any_positive = false;
  for (double v : isrf.values) {
    require(std::isfinite(v), Errc::ZeroIsrf, "non-finite ISRF sample");
    require(v >= 0.0, Errc::ZeroIsrf, "negative ISRF sample at ingestion");
    any_positive = any_positive || v > 0.0;
  }
  require(any_positive, Errc::ZeroIsrf, "all-zero ISRF");
}

}  // namespace spirit
