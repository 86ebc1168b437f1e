#pragma once

#include <string>
#include <vector>

#include "spirit/core/grid.hpp"
#include "spirit/core/isrf.hpp"

namespace spirit {

/// One on-ground characterization template: samples of a response at a known
/// center wavelength, on its own (strictly increasing) offset grid.
struct IsrfTemplate {
  double center = 0.0;
  std::vector<double> offsets;
  std::vector<double> values;
};

/// Sparse set of characterization templates for one instrument; centers must
/// be strictly increasing and there must be at least two of them to define a
/// wavelength-varying family.
struct IsrfTemplateSet {
  std::string instrument_id;
  std::vector<IsrfTemplate> templates;
};

struct InterpolationStats {
  std::size_t clamped_negative_samples = 0;  // interpolation artifacts clipped to 0
};

/// Build one normalized ISRF per grid center from the templates.
///
/// Two interpolation axes, decoupled: each template is first resampled onto
/// the target offset grid with a natural cubic spline over its own offsets,
/// then for every offset sample a spline in center wavelength is threaded
/// through the template values at that offset. Negative artifacts are clamped
/// to 0 (counted in stats) before normalization.
///
/// Throws ExtrapolationRequired when a grid center or offset falls outside
/// the template coverage, InvalidKnots for a degenerate template set.
std::vector<Isrf> interpolate_isrf_set(const IsrfTemplateSet& set, const WavelengthGrid& grid,
                                       InterpolationStats* stats = nullptr);

}  // namespace spirit
