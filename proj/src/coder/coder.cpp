#include "spirit/coder/coder.hpp"

#include <algorithm>
#include <cmath>

#include "spirit/linalg/least_squares.hpp"
#include "spirit/simd/kernels.hpp"

namespace spirit {

namespace {

constexpr double kOmpResidualFloor = 1e-14;

// Columns of a row-major matrix, copied once into contiguous storage.
Matrix transpose_copy(MatView m) {
  Matrix t(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
  return t;
}

// residual = s - sum_i coef_i * column(support_i)
void recompute_residual(const Matrix& psi_t, std::span<const double> s,
                        std::span<const int> support, std::span<const double> coef,
                        std::vector<double>& residual) {
  residual.assign(s.begin(), s.end());
  for (std::size_t i = 0; i < support.size(); ++i)
    simd::active_kernels().axpy(-coef[i], psi_t.row(static_cast<std::size_t>(support[i])),
                                residual.data(), residual.size());
}

}  // namespace

std::vector<double> SparseCode::dense(int n_atoms) const {
  std::vector<double> a(static_cast<std::size_t>(n_atoms), 0.0);
  for (std::size_t i = 0; i < support.size(); ++i)
    a[static_cast<std::size_t>(support[i])] = coefficients[i];
  return a;
}

EffectiveDictionary make_effective_dictionary(MatView window_operator, const Dictionary& dict) {
  require(window_operator.cols == dict.atoms.rows(), Errc::ConfigError,
          "operator and dictionary sample counts differ");
  const Matrix atoms_t = dict.atoms.transposed();
  EffectiveDictionary eff;
  eff.matrix = Matrix(window_operator.rows, dict.atoms.cols());
  for (std::size_t r = 0; r < window_operator.rows; ++r)
    for (std::size_t j = 0; j < dict.atoms.cols(); ++j)
      eff.matrix(r, j) = simd::active_kernels().dot(window_operator.row(r), atoms_t.row(j),
                                                    window_operator.cols);
  return eff;
}

SparseCode omp(MatView psi, std::span<const double> s, int k) {
  require(s.size() == psi.rows, Errc::ConfigError, "signal length does not match operator rows");
  require(k >= 1, Errc::ConfigError, "omp needs k >= 1");
  require(static_cast<std::size_t>(k) <= std::min(psi.cols, psi.rows), Errc::ConfigError,
          "omp k exceeds min(atoms, observations)");

  const Matrix psi_t = transpose_copy(psi);
  const std::size_t n_atoms = psi.cols;
  std::vector<double> col_norm(n_atoms);
  for (std::size_t j = 0; j < n_atoms; ++j)
    col_norm[j] = std::sqrt(simd::active_kernels().sq_norm(psi_t.row(j), psi.rows));

  SparseCode code;
  std::vector<char> selected(n_atoms, 0);
  std::vector<double> residual(s.begin(), s.end());
  code.residual_norm = std::sqrt(simd::sq_norm(residual));

  while (code.k() < k) {
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t j = 0; j < n_atoms; ++j) {
      if (selected[j]) continue;
      const double score =
          col_norm[j] > 0.0
              ? std::fabs(simd::active_kernels().dot(psi_t.row(j), residual.data(), psi.rows)) /
                    col_norm[j]
              : 0.0;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    selected[best] = 1;
    code.support.push_back(static_cast<int>(best));

    auto ls = linalg::solve_least_squares_on_support(psi, s, code.support);
    code.coefficients = std::move(ls.x);
    code.rank_deficient = code.rank_deficient || ls.rank_deficient;

    recompute_residual(psi_t, s, code.support, code.coefficients, residual);
    code.residual_norm = std::sqrt(simd::sq_norm(residual));
    if (code.residual_norm < kOmpResidualFloor) break;
  }
  return code;
}

SparseCode lasso(MatView psi, std::span<const double> s, double gamma,
                 const LassoOptions& opts) {
  require(s.size() == psi.rows, Errc::ConfigError, "signal length does not match operator rows");
  require(gamma >= 0.0, Errc::ConfigError, "lasso penalty must be >= 0");

  const Matrix psi_t = transpose_copy(psi);
  const std::size_t n_atoms = psi.cols;
  std::vector<double> col_sq(n_atoms);
  for (std::size_t j = 0; j < n_atoms; ++j)
    col_sq[j] = simd::active_kernels().sq_norm(psi_t.row(j), psi.rows);

  std::vector<double> alpha(n_atoms, 0.0);
  std::vector<double> residual(s.begin(), s.end());
  const double threshold = gamma / 2.0;

  for (long sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (std::size_t j = 0; j < n_atoms; ++j) {
      if (col_sq[j] == 0.0) continue;
      const double corr =
          simd::active_kernels().dot(psi_t.row(j), residual.data(), psi.rows) +
          col_sq[j] * alpha[j];
      double next = 0.0;
      if (corr > threshold)
        next = (corr - threshold) / col_sq[j];
      else if (corr < -threshold)
        next = (corr + threshold) / col_sq[j];
      const double change = next - alpha[j];
      if (change != 0.0) {
        simd::active_kernels().axpy(-change, psi_t.row(j), residual.data(), residual.size());
        alpha[j] = next;
        max_change = std::max(max_change, std::fabs(change));
      }
    }
    if (max_change < opts.tol) break;
  }

  SparseCode code;
  for (std::size_t j = 0; j < n_atoms; ++j) {
    if (std::fabs(alpha[j]) > opts.support_eps) {
      code.support.push_back(static_cast<int>(j));
      code.coefficients.push_back(alpha[j]);
    }
  }
  code.residual_norm = std::sqrt(simd::sq_norm(residual));
  code.underdetermined = gamma == 0.0 && psi.rows < psi.cols;
  return code;
}

SparseCode lasso_target_k(MatView psi, std::span<const double> s, int k,
                          const LassoOptions& opts) {
  require(k >= 1, Errc::ConfigError, "lasso_target_k needs k >= 1");

  const Matrix psi_t = transpose_copy(psi);
  double gamma_hi = 0.0;
  for (std::size_t j = 0; j < psi.cols; ++j)
    gamma_hi = std::max(
        gamma_hi, 2.0 * std::fabs(simd::active_kernels().dot(psi_t.row(j), s.data(), psi.rows)));

  // Support size shrinks (weakly) as gamma grows; bisect for size == k,
  // keeping the closest size seen (ties prefer the larger support).
  double lo = 0.0, hi = gamma_hi;
  SparseCode best = lasso(psi, s, lo, opts);
  int best_gap = std::abs(best.k() - k);
  for (int iter = 0; iter < 60 && best_gap != 0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    SparseCode cand = lasso(psi, s, mid, opts);
    const int cand_k = cand.k();
    const int gap = std::abs(cand_k - k);
    if (gap < best_gap || (gap == best_gap && cand_k > best.k())) {
      best = std::move(cand);
      best_gap = gap;
    }
    if (cand_k > k)
      lo = mid;
    else
      hi = mid;
  }
  best.target_k_missed = best.k() != k;
  if (best.k() == 0) return best;  // nothing to debias
  return debias(psi, s, best);
}

SparseCode debias(MatView psi, std::span<const double> s, const SparseCode& code) {
  require(!code.support.empty(), Errc::NoSupport, "debias needs a non-empty support");

  auto ls = linalg::solve_least_squares_on_support(psi, s, code.support);
  SparseCode out = code;
  out.coefficients = std::move(ls.x);
  out.rank_deficient = code.rank_deficient || ls.rank_deficient;

  const Matrix psi_t = transpose_copy(psi);
  std::vector<double> residual;
  recompute_residual(psi_t, s, out.support, out.coefficients, residual);
  out.residual_norm = std::sqrt(simd::sq_norm(residual));
  return out;
}

Isrf reconstruct_isrf(const Dictionary& dict, const SparseCode& code, double center) {
  Isrf isrf;
  isrf.center = center;
  isrf.values.assign(dict.atoms.rows(), 0.0);
  for (std::size_t i = 0; i < code.support.size(); ++i) {
    const auto j = static_cast<std::size_t>(code.support[i]);
    require(j < dict.atoms.cols(), Errc::OutOfRange, "support index outside dictionary");
    const double c = code.coefficients[i];
    for (std::size_t r = 0; r < dict.atoms.rows(); ++r) isrf.values[r] += c * dict.atoms(r, j);
  }
  return isrf;
}

}  // namespace spirit
