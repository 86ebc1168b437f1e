#pragma once

#include <span>
#include <vector>

#include "spirit/common.hpp"

namespace spirit {

/// Bell-shaped response A*exp(-(x-mu)^2 / (2*sigma2)) on the offset grid.
struct GaussParams {
  double amplitude = 0.0;
  double mu = 0.0;      // center offset (nm)
  double sigma2 = 0.0;  // variance (nm^2)
};

/// Generalized bell A*exp(-|(x-mu)/w|^k); k=2 with w=sqrt(2*sigma2)
/// reproduces the Gaussian shape.
struct SuperGaussParams {
  double amplitude = 0.0;
  double mu = 0.0;
  double w = 0.0;  // scale (nm)
  double k = 0.0;  // shape exponent
};

std::vector<double> eval_gauss(const GaussParams& p, std::span<const double> offsets);
std::vector<double> eval_supergauss(const SuperGaussParams& p, std::span<const double> offsets);

/// Moment/FWHM initialization from a pilot response sampled on the offsets:
/// mu0 = sample mean, sigma0 = FWHM / (2*sqrt(2*ln 2)), amplitude = unit-area
/// Gaussian value (2*pi*sigma0^2)^(-1/2). Throws DegenerateInit when the
/// pilot has no usable peak.
GaussParams init_gauss(std::span<const double> pilot, std::span<const double> offsets);

/// Seed the generalized model from Gaussian init values: k0 = 2,
/// w0 = sqrt(2)*sigma0, amplitude = (k0/(2*w0)) * Gamma(1/k0).
SuperGaussParams init_supergauss(const GaussParams& g);

}  // namespace spirit
