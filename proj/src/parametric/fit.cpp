#include "spirit/parametric/fit.hpp"

#include <cmath>

#include "spirit/simd/kernels.hpp"

namespace spirit {

namespace {

double window_cost(MatView op, std::span<const double> s, std::span<const double> model,
                   std::vector<double>& scratch) {
  scratch.resize(op.rows);
  simd::matvec(op, model, scratch);
  return simd::sq_diff_sum(scratch, s);
}

}  // namespace

ParametricFit fit_parametric(ParametricModel model, MatView op, std::span<const double> s,
                             std::span<const double> offsets, const GaussParams& gauss_init,
                             const NelderMeadOptions& opts) {
  require(op.cols == offsets.size(), Errc::ConfigError,
          "operator columns must match the offset grid");
  require(op.rows == s.size(), Errc::ConfigError, "window vector must match operator rows");

  std::vector<double> scratch;
  ParametricFit out;

  if (model == ParametricModel::Gauss) {
    // Search over (A, mu, log sigma2) to keep the variance positive.
    auto objective = [&](std::span<const double> x) {
      GaussParams p{x[0], x[1], std::exp(x[2])};
      return window_cost(op, s, eval_gauss(p, offsets), scratch);
    };
    const std::vector<double> start = {gauss_init.amplitude, gauss_init.mu,
                                       std::log(gauss_init.sigma2)};
    NelderMeadResult r = nelder_mead(objective, start, opts);
    GaussParams p{r.x[0], r.x[1], std::exp(r.x[2])};
    out.params = p;
    out.cost = r.cost;
    out.iterations = r.iterations;
    out.converged = r.converged;
    out.estimate = eval_gauss(p, offsets);
    return out;
  }

  const SuperGaussParams sg0 = init_supergauss(gauss_init);
  auto objective = [&](std::span<const double> x) {
    SuperGaussParams p{x[0], x[1], std::exp(x[2]), std::exp(x[3])};
    return window_cost(op, s, eval_supergauss(p, offsets), scratch);
  };
  const std::vector<double> start = {sg0.amplitude, sg0.mu, std::log(sg0.w), std::log(sg0.k)};
  NelderMeadResult r = nelder_mead(objective, start, opts);
  SuperGaussParams p{r.x[0], r.x[1], std::exp(r.x[2]), std::exp(r.x[3])};
  out.params = p;
  out.cost = r.cost;
  out.iterations = r.iterations;
  out.converged = r.converged;
  out.estimate = eval_supergauss(p, offsets);
  return out;
}

}  // namespace spirit
