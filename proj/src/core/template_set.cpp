#include "spirit/core/template_set.hpp"

#include <algorithm>

#include "spirit/core/matrix.hpp"
#include "spirit/core/spline.hpp"

namespace spirit {

std::vector<Isrf> interpolate_isrf_set(const IsrfTemplateSet& set, const WavelengthGrid& grid,
                                       InterpolationStats* stats) {
  const auto& tpls = set.templates;
  require(tpls.size() >= 2, Errc::InvalidKnots,
          "need at least two templates to interpolate across wavelength");
  for (std::size_t t = 1; t < tpls.size(); ++t)
    require(tpls[t].center > tpls[t - 1].center, Errc::InvalidKnots,
            "template centers must be strictly increasing");

  const double c_lo = tpls.front().center;
  const double c_hi = tpls.back().center;
  for (double c : grid.centers())
    require(c >= c_lo && c <= c_hi, Errc::ExtrapolationRequired,
            "grid center outside template center range");

  const int n = grid.n_samples();
  const double off_lo = grid.offset(0);
  const double off_hi = grid.offset(n - 1);

  // Stage 1: resample every template onto the target offset grid.
  Matrix resampled(tpls.size(), n);
  for (std::size_t t = 0; t < tpls.size(); ++t) {
    const auto& tpl = tpls[t];
    require(tpl.offsets.size() == tpl.values.size() && tpl.offsets.size() >= 2,
            Errc::InvalidKnots, "template needs matching offset/value samples");
    require(tpl.offsets.front() <= off_lo && tpl.offsets.back() >= off_hi,
            Errc::ExtrapolationRequired, "template offsets do not span the target grid");
    CubicSpline s(tpl.offsets, tpl.values);
    for (int i = 0; i < n; ++i) resampled(t, i) = s(grid.offset(i));
  }

  // Stage 2: per offset sample, spline across center wavelength.
  std::vector<double> centers(tpls.size());
  for (std::size_t t = 0; t < tpls.size(); ++t) centers[t] = tpls[t].center;

  const int n_out = grid.n_centers();
  Matrix out(n_out, n);
  std::vector<double> column(tpls.size());
  for (int i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < tpls.size(); ++t) column[t] = resampled(t, i);
    CubicSpline s(centers, column);
    for (int l = 0; l < n_out; ++l) out(l, i) = s(grid.center(l));
  }

  std::size_t clamped = 0;
  std::vector<Isrf> result;
  result.reserve(n_out);
  for (int l = 0; l < n_out; ++l) {
    Isrf isrf;
    isrf.center = grid.center(l);
    isrf.values.assign(out.row(l), out.row(l) + n);
    for (double& v : isrf.values) {
      if (v < 0.0) {
        v = 0.0;
        ++clamped;
      }
    }
    result.push_back(normalize(std::move(isrf)));
  }
  if (stats != nullptr) stats->clamped_negative_samples = clamped;
  return result;
}

}  // namespace spirit
