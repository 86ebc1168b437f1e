#pragma once

#include <variant>

#include "spirit/core/matrix.hpp"
#include "spirit/parametric/models.hpp"
#include "spirit/parametric/nelder_mead.hpp"

namespace spirit {

enum class ParametricModel { Gauss, SuperGauss };

struct ParametricFit {
  std::variant<GaussParams, SuperGaussParams> params;
  double cost = 0.0;          // ||s - R * I(params)||^2 at the optimum
  int iterations = 0;
  bool converged = false;
  std::vector<double> estimate;  // model evaluated on the offsets
};

/// Least-squares fit of a parametric response through the windowed operator:
/// minimize ||s - R * I_beta||^2 with a Nelder-Mead search over
/// (A, mu, log sigma2) or (A, mu, log w, log k). The returned cost never
/// exceeds the cost of the initialization.
ParametricFit fit_parametric(ParametricModel model, MatView window_operator,
                             std::span<const double> s_window, std::span<const double> offsets,
                             const GaussParams& gauss_init,
                             const NelderMeadOptions& opts = {});

}  // namespace spirit
