#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spirit/eval/estimate.hpp"

namespace spirit {

struct KSweepRow {
  int k = 0;
  double mean_error = 0.0;
  double rho = 0.0;
};
struct KSweepTable {
  Method method = Method::Omp;
  std::vector<KSweepRow> rows;
  int best_k = 0;  // argmin of mean_error (lowest k on ties)
};

/// Mean error vs. atom count; also reports the k minimizing the average
/// error, the usual selection rule for the sparsity level.
KSweepTable sweep_k(const Dataset& dataset, Method method, const Dictionary* dict, int k_min,
                    int k_max, const EstimateOptions& options);

struct SnrSweepCell {
  Method method = Method::Omp;
  double snr_db = 0.0;
  double mean_error = 0.0;  // averaged over seeds
  double rho = 0.0;
  bool below_one_percent = false;
};
struct SnrSweepTable {
  std::vector<Method> methods;
  std::vector<double> snr_db;
  std::vector<SnrSweepCell> cells;  // methods-major
  int n_seeds = 1;
};

/// Noise robustness protocol: re-noise the clean measurement per (snr, seed),
/// estimate, and average the error metrics over seeds. Entries below the 1%
/// target are flagged. dataset.measurement must be the noise-free synthesis.
SnrSweepTable sweep_snr(const Dataset& dataset, const std::vector<Method>& methods,
                        const Dictionary* dict, const std::vector<double>& snr_db, int n_seeds,
                        std::uint64_t base_seed, const EstimateOptions& options);

struct GridSweepCell {
  Method method = Method::Omp;
  int n_obs = 0;
  int n_d = 0;  // not applicable (replicated) for parametric methods
  double mean_error = 0.0;
  double log10_mean_error = 0.0;
};
struct GridSweepTable {
  std::vector<GridSweepCell> cells;
};

/// Window-size x dictionary-size study. Sparse methods rebuild the dictionary
/// per n_d from `training`; parametric methods are estimated once per n_obs
/// and replicated across the n_d axis.
GridSweepTable sweep_grid(const Dataset& dataset, const std::vector<Method>& methods,
                          const std::vector<int>& n_obs_list, const std::vector<int>& n_d_list,
                          int k, const std::vector<Isrf>& training, DictionaryMethod dict_method,
                          const EstimateOptions& options);

/// One scene/FOV worth of ground truth: the full wavelength-varying ISRF set
/// under that illumination.
struct SceneSet {
  std::string scene_id;
  int fov = 0;
  std::vector<Isrf> isrfs;
};

struct SceneStudyOptions {
  int uniform_stride = 10;
  /// (scene-set index, wavelength index) pairs added to the mixed training.
  std::vector<std::pair<int, int>> scene_training_picks;
  std::vector<int> k_list = {1, 2, 3, 4, 5, 6};
  int n_d = 25;
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  DictionaryMethod dict_method = DictionaryMethod::Svd;
  EstimateOptions estimate;
};

struct SceneStudyRow {
  std::string dict_kind;  // "uniform" | "mixed"
  std::string scene_id;
  int fov = 0;
  int k = 0;
  double mean_error = 0.0;
  double max_error = 0.0;
};
struct SceneStudyTable {
  std::vector<SceneStudyRow> rows;
  int uniform_training_count = 0;
  int mixed_training_count = 0;
};

/// Estimate every scene/FOV ISRF set twice: with a dictionary built from the
/// strided uniform family only, and with the mixed dictionary that adds the
/// picked scene examples. The uniform dictionary uses the same strided subset
/// as the mixed one, so an empty pick list makes both runs identical.
SceneStudyTable scene_study(const std::vector<Isrf>& uniform_isrfs,
                            const std::vector<SceneSet>& scene_sets,
                            const WavelengthGrid& grid, const ReferenceSpectrum& ref,
                            const SceneStudyOptions& options);

}  // namespace spirit
