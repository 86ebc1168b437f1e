#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spirit/coder/coder.hpp"
#include "spirit/core/grid.hpp"
#include "spirit/core/isrf.hpp"
#include "spirit/core/spline.hpp"
#include "spirit/dictionary/dictionary.hpp"
#include "spirit/forward/measurement.hpp"
#include "spirit/parametric/fit.hpp"

namespace spirit {

enum class Method { Gauss, SuperGauss, Omp, Lasso };

const char* method_name(Method m);
Method parse_method(const std::string& name);
bool method_is_sparse(Method m);

/// Everything a single estimation run consumes. `truth` enables error
/// metrics; `pilots` seed the parametric initializations (typically the
/// on-ground interpolated templates).
struct Dataset {
  WavelengthGrid grid;
  ReferenceSpectrum ref;
  MeasurementSet measurement;
  std::vector<Isrf> truth;
  std::vector<Isrf> pilots;
};

struct EstimateOptions {
  int k = 4;        // atoms per window (omp) / target support (lasso)
  int n_obs = 80;   // window size minus one, must be even
  int jobs = 0;     // parallelism for the per-wavelength loop, 0 = all cores
  NelderMeadOptions nelder_mead;
  LassoOptions lasso;
};

struct WavelengthEstimate {
  int index = 0;
  double center = 0.0;
  std::vector<double> estimate;
  double error = 0.0;        // E_l, meaningful when the dataset has truth
  double residual_sq = 0.0;  // ||s_l - R_l Ihat_l||^2 over the window
  std::optional<SparseCode> code;
  std::optional<GaussParams> gauss;
  std::optional<SuperGaussParams> supergauss;
  int fit_iterations = 0;
  bool fit_converged = false;
};

struct EstimationResult {
  Method method = Method::Omp;
  int first = 0, last = -1;  // estimated index range (inclusive)
  bool has_truth = false;
  std::vector<WavelengthEstimate> entries;
  double mean_error = 0.0;  // mean E_l over entries (truth datasets)
  double rho = 0.0;         // mean window residual
  int k = 0;
  int n_obs = 0;
  int n_atoms = 0;  // dictionary size for sparse methods
};

/// Per-wavelength estimation driver: build the windowed operator for every
/// valid center, run the method, reconstruct, and compute metrics when truth
/// is available. Sparse methods need `dict` (ConfigError otherwise);
/// parametric methods need dataset.pilots. Deterministic for a fixed dataset
/// and options, independent of the job count.
EstimationResult estimate_all(const Dataset& dataset, Method method, const Dictionary* dict,
                              const EstimateOptions& options);

}  // namespace spirit
