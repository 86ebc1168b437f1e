#include "spirit/eval/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "spirit/forward/model.hpp"
#include "spirit/forward/noise.hpp"

namespace spirit {

KSweepTable sweep_k(const Dataset& dataset, Method method, const Dictionary* dict, int k_min,
                    int k_max, const EstimateOptions& options) {
  require(k_min >= 1 && k_min <= k_max, Errc::ConfigError, "need 1 <= k_min <= k_max");
  KSweepTable table;
  table.method = method;
  for (int k = k_min; k <= k_max; ++k) {
    EstimateOptions opts = options;
    opts.k = k;
    EstimationResult r = estimate_all(dataset, method, dict, opts);
    table.rows.push_back({k, r.mean_error, r.rho});
  }
  table.best_k = table.rows.front().k;
  double best = table.rows.front().mean_error;
  for (const auto& row : table.rows) {
    if (row.mean_error < best) {
      best = row.mean_error;
      table.best_k = row.k;
    }
  }
  return table;
}

SnrSweepTable sweep_snr(const Dataset& dataset, const std::vector<Method>& methods,
                        const Dictionary* dict, const std::vector<double>& snr_db, int n_seeds,
                        std::uint64_t base_seed, const EstimateOptions& options) {
  require(!methods.empty() && !snr_db.empty(), Errc::ConfigError,
          "snr sweep needs methods and snr values");
  require(n_seeds >= 1, Errc::ConfigError, "need at least one noise replicate");

  SnrSweepTable table;
  table.methods = methods;
  table.snr_db = snr_db;
  table.n_seeds = n_seeds;
  for (Method method : methods) {
    for (double snr : snr_db) {
      const int reps = std::isinf(snr) ? 1 : n_seeds;  // no-noise sentinel: one run
      double err_acc = 0.0, rho_acc = 0.0;
      for (int rep = 0; rep < reps; ++rep) {
        Dataset noisy = dataset;
        noisy.measurement =
            add_noise(dataset.measurement, snr, base_seed + static_cast<std::uint64_t>(rep));
        EstimationResult r = estimate_all(noisy, method, dict, options);
        err_acc += r.mean_error;
        rho_acc += r.rho;
      }
      SnrSweepCell cell;
      cell.method = method;
      cell.snr_db = snr;
      cell.mean_error = err_acc / reps;
      cell.rho = rho_acc / reps;
      cell.below_one_percent = cell.mean_error < 0.01;
      table.cells.push_back(cell);
    }
  }
  return table;
}

GridSweepTable sweep_grid(const Dataset& dataset, const std::vector<Method>& methods,
                          const std::vector<int>& n_obs_list, const std::vector<int>& n_d_list,
                          int k, const std::vector<Isrf>& training, DictionaryMethod dict_method,
                          const EstimateOptions& options) {
  require(!n_obs_list.empty() && !n_d_list.empty(), Errc::ConfigError,
          "grid sweep needs n_obs and n_d values");

  GridSweepTable table;
  for (Method method : methods) {
    if (method_is_sparse(method)) {
      for (int n_d : n_d_list) {
        const Dictionary dict = dict_method == DictionaryMethod::Svd
                                    ? build_svd(training, n_d)
                                    : build_ksvd(training, n_d, std::min(k, n_d));
        for (int n_obs : n_obs_list) {
          EstimateOptions opts = options;
          opts.k = std::min(k, std::min(n_d, n_obs + 1));
          opts.n_obs = n_obs;
          EstimationResult r = estimate_all(dataset, method, &dict, opts);
          table.cells.push_back(
              {method, n_obs, n_d, r.mean_error, std::log10(r.mean_error)});
        }
      }
    } else {
      for (int n_obs : n_obs_list) {
        EstimateOptions opts = options;
        opts.n_obs = n_obs;
        EstimationResult r = estimate_all(dataset, method, nullptr, opts);
        for (int n_d : n_d_list)
          table.cells.push_back(
              {method, n_obs, n_d, r.mean_error, std::log10(r.mean_error)});
      }
    }
  }
  return table;
}

SceneStudyTable scene_study(const std::vector<Isrf>& uniform_isrfs,
                            const std::vector<SceneSet>& scene_sets,
                            const WavelengthGrid& grid, const ReferenceSpectrum& ref,
                            const SceneStudyOptions& options) {
  std::vector<Isrf> scene_examples;
  for (const auto& [set_idx, isrf_idx] : options.scene_training_picks) {
    require(set_idx >= 0 && set_idx < static_cast<int>(scene_sets.size()), Errc::ConfigError,
            "scene training pick outside scene set list");
    const auto& set = scene_sets[static_cast<std::size_t>(set_idx)].isrfs;
    require(isrf_idx >= 0 && isrf_idx < static_cast<int>(set.size()), Errc::ConfigError,
            "scene training pick outside wavelength range");
    scene_examples.push_back(set[static_cast<std::size_t>(isrf_idx)]);
  }

  const int k_sparse = std::min(options.estimate.k, options.n_d);
  const Dictionary uniform_dict = build_mixed(uniform_isrfs, {}, options.uniform_stride,
                                              options.n_d, options.dict_method, k_sparse);
  const Dictionary mixed_dict =
      build_mixed(uniform_isrfs, scene_examples, options.uniform_stride, options.n_d,
                  options.dict_method, k_sparse);

  SceneStudyTable table;
  table.uniform_training_count = uniform_dict.uniform_count;
  table.mixed_training_count = mixed_dict.uniform_count + mixed_dict.scene_count;

  for (const SceneSet& set : scene_sets) {
    MeasurementSet clean = convolve_forward(ref, set.isrfs, grid);
    MeasurementSet meas = add_noise(clean, options.snr_db, options.seed);
    const Dataset dataset{grid, ref, std::move(meas), set.isrfs, {}};

    for (const auto* dict : {&uniform_dict, &mixed_dict}) {
      const char* kind = dict == &uniform_dict ? "uniform" : "mixed";
      for (int k : options.k_list) {
        EstimateOptions opts = options.estimate;
        opts.k = k;
        EstimationResult r = estimate_all(dataset, Method::Omp, dict, opts);
        double max_err = 0.0;
        for (const auto& e : r.entries) max_err = std::max(max_err, e.error);
        table.rows.push_back({kind, set.scene_id, set.fov, k, r.mean_error, max_err});
      }
    }
  }
  return table;
}

}  // namespace spirit
