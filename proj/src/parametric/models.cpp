#include "spirit/parametric/models.hpp"

#include <cmath>
#include <numbers>

namespace spirit {

std::vector<double> eval_gauss(const GaussParams& p, std::span<const double> offsets) {
  std::vector<double> out(offsets.size());
  const double inv_two_sigma2 = 1.0 / (2.0 * p.sigma2);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const double d = offsets[i] - p.mu;
    out[i] = p.amplitude * std::exp(-d * d * inv_two_sigma2);
  }
  return out;
}

std::vector<double> eval_supergauss(const SuperGaussParams& p, std::span<const double> offsets) {
  std::vector<double> out(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const double d = std::fabs(offsets[i] - p.mu) / p.w;
    out[i] = p.amplitude * std::exp(-std::pow(d, p.k));
  }
  return out;
}

GaussParams init_gauss(std::span<const double> pilot, std::span<const double> offsets) {
  require(pilot.size() == offsets.size() && pilot.size() >= 3, Errc::DegenerateInit,
          "pilot and offsets must match and hold >= 3 samples");

  double mass = 0.0, first_moment = 0.0, peak = 0.0, trough = pilot[0];
  std::size_t peak_idx = 0;
  for (std::size_t i = 0; i < pilot.size(); ++i) {
    mass += pilot[i];
    first_moment += pilot[i] * offsets[i];
    trough = std::min(trough, pilot[i]);
    if (pilot[i] > peak) {
      peak = pilot[i];
      peak_idx = i;
    }
  }
  require(mass > 0.0 && peak > trough, Errc::DegenerateInit, "flat pilot response");

  const double mu0 = first_moment / mass;

  // FWHM from the half-maximum crossings on both sides of the peak, with
  // linear interpolation between samples.
  const double half = 0.5 * peak;
  double left = offsets.front();
  for (std::size_t i = peak_idx; i-- > 0;) {
    if (pilot[i] <= half) {
      const double t = (half - pilot[i]) / (pilot[i + 1] - pilot[i]);
      left = offsets[i] + t * (offsets[i + 1] - offsets[i]);
      break;
    }
  }
  double right = offsets.back();
  for (std::size_t i = peak_idx + 1; i < pilot.size(); ++i) {
    if (pilot[i] <= half) {
      const double t = (pilot[i - 1] - half) / (pilot[i - 1] - pilot[i]);
      right = offsets[i - 1] + t * (offsets[i] - offsets[i - 1]);
      break;
    }
  }
  const double fwhm = right - left;
  require(fwhm > 0.0, Errc::DegenerateInit, "could not resolve a FWHM");

  GaussParams p;
  p.mu = mu0;
  const double sigma0 = fwhm / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
  p.sigma2 = sigma0 * sigma0;
  // Unit-area Gaussian amplitude, scaled by the pilot's own area so the
  // seed matches the data normalization (a discrete-sum-1 pilot has area
  // delta, a continuous-area-1 pilot has area 1).
  const double step = (offsets.back() - offsets.front()) / (offsets.size() - 1);
  p.amplitude = mass * step / std::sqrt(2.0 * std::numbers::pi * p.sigma2);
  return p;
}

SuperGaussParams init_supergauss(const GaussParams& g) {
  require(g.sigma2 > 0.0, Errc::DegenerateInit, "non-positive variance");
  SuperGaussParams p;
  p.mu = g.mu;
  p.k = 2.0;
  p.w = std::sqrt(2.0) * std::sqrt(g.sigma2);
  // (k/2w)*Gamma(1/k) carries the same pilot-area factor as the Gaussian seed.
  const double area = g.amplitude * std::sqrt(2.0 * std::numbers::pi * g.sigma2);
  p.amplitude = area * p.k / (2.0 * p.w) * std::tgamma(1.0 / p.k);
  return p;
}

}  // namespace spirit
