#pragma once

#include <functional>
#include <span>
#include <vector>

namespace spirit {

struct NelderMeadOptions {
  int max_iterations = 20000;
  double simplex_tol = 1e-10;  // stop when simplex diameter drops below
  // Standard coefficients: reflection, expansion, contraction, shrink.
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;  // simplex collapsed before hitting the iteration cap
};

/// Derivative-free simplex minimization. Deterministic for a fixed start:
/// the initial simplex perturbs each coordinate by 5% (or 2.5e-4 when zero).
/// Non-finite objective values are treated as +inf, so NaN never propagates
/// into the simplex. The best vertex ever seen is returned, which can never
/// be worse than the starting point.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::span<const double> start, const NelderMeadOptions& opts = {});

}  // namespace spirit
