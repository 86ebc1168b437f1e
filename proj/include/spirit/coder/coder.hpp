#pragma once

#include <vector>

#include "spirit/core/isrf.hpp"
#include "spirit/core/matrix.hpp"
#include "spirit/dictionary/dictionary.hpp"

namespace spirit {

/// Sparse coefficient vector over a dictionary: atom indices and their
/// coefficients, plus the fit residual and numerical flags.
struct SparseCode {
  std::vector<int> support;          // distinct atom indices
  std::vector<double> coefficients;  // aligned with support
  double residual_norm = 0.0;
  bool rank_deficient = false;  // a least-squares substep used a min-norm solution
  bool underdetermined = false; // lasso with gamma=0 on a wide system
  bool target_k_missed = false; // lasso_target_k settled for a nearby size

  int k() const { return static_cast<int>(support.size()); }
  std::vector<double> dense(int n_atoms) const;
};

/// Effective per-window dictionary: the windowed forward operator applied to
/// every atom (rows = window observations, cols = atoms).
struct EffectiveDictionary {
  Matrix matrix;
};

EffectiveDictionary make_effective_dictionary(MatView window_operator, const Dictionary& dict);

/// Orthogonal matching pursuit: greedily pick the column with the largest
/// normalized correlation to the residual (ties break to the lowest index),
/// re-solving the coefficients by least squares on the support after every
/// selection. Stops at k atoms or when the residual norm drops below 1e-14.
SparseCode omp(MatView psi, std::span<const double> s, int k);

struct LassoOptions {
  double tol = 1e-10;        // max coefficient change per sweep
  long max_sweeps = 100000;
  double support_eps = 1e-12;
};

/// Cyclic coordinate descent with soft thresholding for
///   min ||s - Psi a||^2 + gamma * ||a||_1.
SparseCode lasso(MatView psi, std::span<const double> s, double gamma,
                 const LassoOptions& opts = {});

/// Bisect gamma in [0, 2*max|Psi^T s|] until the support size hits k (or the
/// closest achievable size, flagged), then debias on the final support.
SparseCode lasso_target_k(MatView psi, std::span<const double> s, int k,
                          const LassoOptions& opts = {});

/// Replace the coefficients by the least-squares solution restricted to the
/// code's support; never increases the residual. Throws NoSupport on an
/// empty support.
SparseCode debias(MatView psi, std::span<const double> s, const SparseCode& code);

/// Apply the dictionary: estimate = sum_k atom(support_k) * coef_k. The
/// estimate is returned raw (no renormalization, no clamping).
Isrf reconstruct_isrf(const Dictionary& dict, const SparseCode& code, double center = 0.0);

}  // namespace spirit
