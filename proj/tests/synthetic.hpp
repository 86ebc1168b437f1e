#pragma once

// Synthetic instruments shared by the unit and acceptance suites: smooth
// wavelength-varying ISRF families built from a small fixed basis (two bells
// plus a center-dip shape), line-rich spline reference spectra, and the
// asymmetric "scene" distortions used by the mixed-dictionary study.

#include <cstdint>
#include <vector>

#include "spirit/core/grid.hpp"
#include "spirit/core/isrf.hpp"
#include "spirit/core/spline.hpp"
#include "spirit/eval/estimate.hpp"

namespace spirit::testing {

/// Deterministic stream of uniforms/gaussians for test data.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();

 private:
  std::uint64_t state_;
};

std::vector<double> gaussian_shape(const WavelengthGrid& grid, double sigma, double mu = 0.0);

/// Wavelength-varying mixture of three shapes (narrow bell, wide bell,
/// center-dip profile) whose widths, centers, and weights breathe slowly in
/// wavelength. The breathing tail gives the family a smoothly decaying
/// singular spectrum like real characterization sets.
std::vector<Isrf> make_truth_family(const WavelengthGrid& grid, double sigma_narrow);

/// Same family evaluated at arbitrary centers (for held-out training).
std::vector<Isrf> make_family_at(const std::vector<double>& centers, double span_lo,
                                 double span_hi, const WavelengthGrid& grid,
                                 double sigma_narrow);

/// Pure Gaussian family with sigma varying linearly over [span_lo, span_hi].
std::vector<Isrf> make_gaussian_family(const WavelengthGrid& grid, double sigma_lo,
                                       double sigma_hi, double span_lo, double span_hi);

/// Absorption-line reference: unit continuum with a gentle slope minus many
/// Gaussian lines of random position/width/depth, sampled onto spline knots.
ReferenceSpectrum make_reference(double lo, double hi, double knot_step, int n_lines,
                                 std::uint64_t seed);

/// Left-side suppression mimicking non-uniform slit illumination:
/// v'(x) = v(x) * (1 - amount * logistic(-x / width)), clamped, normalized.
Isrf distort_left(const Isrf& isrf, const WavelengthGrid& grid, double amount, double width);

/// Random matrix with orthonormalized columns (rows >= cols).
Matrix random_orthonormal(std::size_t rows, std::size_t cols, std::uint64_t seed);

struct Instrument {
  WavelengthGrid grid;
  ReferenceSpectrum ref;
  std::vector<Isrf> truth;
  // Full extent of the shape family's wavelength parameterization; the grid
  // covers a section of it, the way missions evaluate a slice of the band.
  double family_lo = 0.0;
  double family_hi = 0.0;
  double sigma_narrow = 0.0;

  /// Held-out family samples across the full band (offset off the grid).
  std::vector<Isrf> held_out_training(int count) const;
};

/// Standard benchmark instrument: mixture-family truths on a grid with
/// n_centers centers spaced `delta` apart, reference sampled at delta/2.
/// The family parameterization spans `family_span_factor` grid widths, so the
/// per-window shape drift matches slowly varying real instruments.
Instrument make_instrument(int n_centers, int n_half, double delta, std::uint64_t seed,
                           bool gaussian_truth = false, double family_span_factor = 12.0);

/// Dataset wrapper with noise-free synthesis; pilots = truth family templates.
Dataset make_dataset(const Instrument& inst);

}  // namespace spirit::testing
