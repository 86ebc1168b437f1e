#include "spirit/eval/estimate.hpp"

#include <cmath>

#include "spirit/eval/metrics.hpp"
#include "spirit/forward/model.hpp"
#include "spirit/simd/kernels.hpp"
#include "spirit/util/parallel.hpp"

namespace spirit {

const char* method_name(Method m) {
  switch (m) {
    case Method::Gauss: return "gauss";
    case Method::SuperGauss: return "supergauss";
    case Method::Omp: return "omp";
    case Method::Lasso: return "lasso";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "gauss") return Method::Gauss;
  if (name == "supergauss") return Method::SuperGauss;
  if (name == "omp") return Method::Omp;
  if (name == "lasso") return Method::Lasso;
  fail(Errc::ConfigError, "unknown method '" + name + "'");
}

bool method_is_sparse(Method m) { return m == Method::Omp || m == Method::Lasso; }

EstimationResult estimate_all(const Dataset& dataset, Method method, const Dictionary* dict,
                              const EstimateOptions& options) {
  const WavelengthGrid& grid = dataset.grid;
  require(options.n_obs >= 0 && options.n_obs % 2 == 0, Errc::ConfigError,
          "n_obs must be even and >= 0");
  require(static_cast<int>(dataset.measurement.values.size()) == grid.n_centers(),
          Errc::ConfigError, "measurement length does not match the grid");
  const bool sparse = method_is_sparse(method);
  if (sparse) {
    require(dict != nullptr, Errc::ConfigError, "sparse methods need a dictionary");
    require(static_cast<int>(dict->atoms.rows()) == grid.n_samples(), Errc::ConfigError,
            "dictionary sample count does not match the grid");
    require(options.k >= 1, Errc::ConfigError, "need k >= 1 atoms");
  } else {
    require(static_cast<int>(dataset.pilots.size()) == grid.n_centers(), Errc::ConfigError,
            "parametric methods need one pilot ISRF per center");
  }
  if (!dataset.truth.empty())
    require(static_cast<int>(dataset.truth.size()) == grid.n_centers(), Errc::ConfigError,
            "truth set does not match the grid");

  const ReferenceRows rows(dataset.ref, grid);
  const int h = options.n_obs / 2;
  const int first = rows.first() + h;
  const int last = rows.last() - h;
  require(first <= last, Errc::DomainTooSmall, "no fully evaluable estimation window");

  // Effective atom responses per center, shared by all windows:
  // eff(m, j) = <reference row m, atom j>.
  Matrix eff;
  if (sparse) {
    const Matrix atoms_t = dict->atoms.transposed();
    const std::size_t n_rows = static_cast<std::size_t>(rows.last() - rows.first() + 1);
    eff = Matrix(n_rows, atoms_t.rows());
    parallel_for(n_rows, options.jobs, [&](std::size_t r) {
      const auto row = rows.row(rows.first() + static_cast<int>(r));
      for (std::size_t j = 0; j < atoms_t.rows(); ++j)
        eff(r, j) = simd::active_kernels().dot(row.data(), atoms_t.row(j), row.size());
    });
  }

  const std::vector<double> offsets = grid.offsets();

  EstimationResult result;
  result.method = method;
  result.first = first;
  result.last = last;
  result.has_truth = !dataset.truth.empty();
  result.k = options.k;
  result.n_obs = options.n_obs;
  result.n_atoms = sparse ? dict->n_atoms : 0;
  result.entries.resize(static_cast<std::size_t>(last - first + 1));

  const std::size_t n_window = static_cast<std::size_t>(options.n_obs + 1);
  parallel_for(result.entries.size(), options.jobs, [&](std::size_t slot) {
    const int l = first + static_cast<int>(slot);
    WavelengthEstimate& e = result.entries[slot];
    e.index = l;
    e.center = grid.center(l);

    bool window_valid = true;
    for (int m = l - h; m <= l + h && window_valid; ++m)
      window_valid = dataset.measurement.valid.empty() || dataset.measurement.valid[m] != 0;
    if (!window_valid) return;  // left empty; filtered below

    const std::span<const double> s_window(dataset.measurement.values.data() + (l - h),
                                           n_window);
    const MatView op = rows.block(l - h, options.n_obs + 1);

    if (sparse) {
      const MatView psi = eff.rows_view(static_cast<std::size_t>(l - h - rows.first()),
                                        n_window);
      SparseCode code = method == Method::Omp
                            ? omp(psi, s_window, options.k)
                            : lasso_target_k(psi, s_window, options.k, options.lasso);
      e.estimate = reconstruct_isrf(*dict, code, e.center).values;
      e.code = std::move(code);
    } else {
      const Isrf& pilot = dataset.pilots[l];
      const GaussParams init = init_gauss(pilot.values, offsets);
      ParametricFit fit = fit_parametric(
          method == Method::Gauss ? ParametricModel::Gauss : ParametricModel::SuperGauss, op,
          s_window, offsets, init, options.nelder_mead);
      e.estimate = std::move(fit.estimate);
      e.fit_iterations = fit.iterations;
      e.fit_converged = fit.converged;
      if (method == Method::Gauss)
        e.gauss = std::get<GaussParams>(fit.params);
      else
        e.supergauss = std::get<SuperGaussParams>(fit.params);
    }

    std::vector<double> reproj(n_window);
    simd::matvec(op, e.estimate, reproj);
    e.residual_sq = simd::sq_diff_sum(reproj, s_window);
    if (result.has_truth)
      e.error = normalized_absolute_error(dataset.truth[l].values, e.estimate);
  });

  // Drop centers skipped for invalid measurement entries.
  std::vector<WavelengthEstimate> kept;
  kept.reserve(result.entries.size());
  for (auto& e : result.entries)
    if (!e.estimate.empty()) kept.push_back(std::move(e));
  result.entries = std::move(kept);
  require(!result.entries.empty(), Errc::DomainTooSmall, "every estimation window was invalid");

  double err_acc = 0.0, rho_acc = 0.0;
  for (const auto& e : result.entries) {
    err_acc += e.error;
    rho_acc += e.residual_sq;
  }
  const double n = static_cast<double>(result.entries.size());
  result.mean_error = result.has_truth ? err_acc / n : 0.0;
  result.rho = rho_acc / n;
  return result;
}

}  // namespace spirit
