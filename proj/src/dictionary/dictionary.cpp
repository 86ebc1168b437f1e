#include "spirit/dictionary/dictionary.hpp"

#include <algorithm>
#include <cmath>

#include "spirit/coder/coder.hpp"
#include "spirit/linalg/least_squares.hpp"
#include "spirit/simd/kernels.hpp"
#include "spirit/util/parallel.hpp"

namespace spirit {

namespace {

// Training signals as columns of an (n x m) matrix, discrete-sum normalized.
Matrix training_matrix(const std::vector<Isrf>& training) {
  require(!training.empty(), Errc::ConfigError, "empty training set");
  const std::size_t n = training[0].values.size();
  Matrix x(n, training.size());
  for (std::size_t m = 0; m < training.size(); ++m) {
    require(training[m].values.size() == n, Errc::ConfigError,
            "training ISRFs have inconsistent sample counts");
    const Isrf norm = normalize(training[m]);
    for (std::size_t r = 0; r < n; ++r) x(r, m) = norm.values[r];
  }
  return x;
}

// Flip the column sign so the largest-magnitude entry (lowest index on ties)
// is positive.
void fix_sign(Matrix& atoms, std::size_t col, std::vector<double>* coefs = nullptr) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < atoms.rows(); ++r) {
    const double a = std::fabs(atoms(r, col));
    if (a > best) {
      best = a;
      arg = r;
    }
  }
  if (atoms(arg, col) < 0.0) {
    for (std::size_t r = 0; r < atoms.rows(); ++r) atoms(r, col) = -atoms(r, col);
    if (coefs != nullptr)
      for (double& c : *coefs) c = -c;
  }
}

std::vector<double> column(const Matrix& m, std::size_t col) {
  std::vector<double> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, col);
  return v;
}

}  // namespace

const char* dictionary_method_name(DictionaryMethod m) {
  return m == DictionaryMethod::Svd ? "svd" : "ksvd";
}

DictionaryMethod parse_dictionary_method(const std::string& name) {
  if (name == "svd") return DictionaryMethod::Svd;
  if (name == "ksvd") return DictionaryMethod::Ksvd;
  fail(Errc::ConfigError, "unknown dictionary method '" + name + "'");
}

Dictionary build_svd(const std::vector<Isrf>& training, int n_atoms) {
  const Matrix x = training_matrix(training);
  require(n_atoms >= 1, Errc::RankDeficient, "need at least one atom");
  require(static_cast<std::size_t>(n_atoms) <= std::min(x.rows(), x.cols()),
          Errc::RankDeficient, "n_atoms exceeds min(sample count, training count)");

  linalg::ThinSvd svd = linalg::thin_svd(x, n_atoms);
  Dictionary dict;
  dict.atoms = std::move(svd.u);
  dict.method = DictionaryMethod::Svd;
  dict.n_atoms = n_atoms;
  dict.training_count = static_cast<int>(training.size());
  dict.singular_values = std::move(svd.singular_values);
  for (std::size_t j = 0; j < dict.atoms.cols(); ++j) fix_sign(dict.atoms, j);
  return dict;
}

Dictionary build_ksvd(const std::vector<Isrf>& training, int n_atoms, int k_sparse,
                      const KsvdOptions& opts) {
  require(opts.iters >= 1, Errc::ConfigError, "ksvd needs iters >= 1");
  require(k_sparse >= 1 && k_sparse <= n_atoms, Errc::ConfigError,
          "ksvd needs 1 <= k_sparse <= n_atoms");

  Dictionary dict = build_svd(training, n_atoms);
  dict.method = DictionaryMethod::Ksvd;
  dict.ksvd_k_sparse = k_sparse;

  const Matrix x = training_matrix(training);
  const std::size_t n = x.rows();
  const std::size_t n_signals = x.cols();
  Matrix& atoms = dict.atoms;

  std::vector<SparseCode> codes(n_signals);
  std::vector<SparseCode> fresh(n_signals);
  Matrix residuals(n_signals, n);  // row m = x_m - Phi * alpha_m
  double post_update_obj = 0.0;    // sqrt-sum tracked through the update pass

  auto install = [&](std::size_t m, SparseCode&& code) {
    std::vector<double> r = column(x, m);
    for (std::size_t i = 0; i < code.support.size(); ++i) {
      const auto j = static_cast<std::size_t>(code.support[i]);
      for (std::size_t row = 0; row < n; ++row) r[row] -= code.coefficients[i] * atoms(row, j);
    }
    std::copy(r.begin(), r.end(), residuals.row(m));
    codes[m] = std::move(code);
    return simd::sq_norm(residuals.row_span(m));
  };

  for (int iter = 0; iter < opts.iters; ++iter) {
    // Sparse coding pass. Greedy re-coding carries no monotonicity guarantee,
    // so accept the fresh codes only when the total objective did not move
    // up; otherwise fall back per signal to a least-squares refit of the
    // previous support, which can never be worse than the tracked residual.
    parallel_for(n_signals, 0, [&](std::size_t m) {
      fresh[m] = omp(atoms, column(x, m), k_sparse);
    });
    double fresh_sq = 0.0;
    for (const SparseCode& c : fresh) fresh_sq += c.residual_norm * c.residual_norm;

    double obj_sq = 0.0;
    if (iter == 0 || std::sqrt(fresh_sq) <= post_update_obj) {
      for (std::size_t m = 0; m < n_signals; ++m) obj_sq += install(m, std::move(fresh[m]));
    } else {
      parallel_for(n_signals, 0, [&](std::size_t m) {
        if (codes[m].support.empty()) return;
        SparseCode kept = debias(atoms, column(x, m), codes[m]);
        if (kept.residual_norm < fresh[m].residual_norm) fresh[m] = std::move(kept);
      });
      for (std::size_t m = 0; m < n_signals; ++m) obj_sq += install(m, std::move(fresh[m]));
    }
    const double objective = std::sqrt(obj_sq);
    if (!dict.ksvd_objective.empty()) {
      const double prev = dict.ksvd_objective.back();
      dict.ksvd_objective.push_back(objective);
      if (objective < 1e-13) break;
      if (prev > 0.0 && (prev - objective) / prev < opts.rel_improvement_stop) break;
    } else {
      dict.ksvd_objective.push_back(objective);
      if (objective < 1e-13) break;
    }
    if (iter + 1 == opts.iters) break;

    // Atom update pass: sequential over atoms by definition.
    std::vector<char> signal_recycled(n_signals, 0);
    for (std::size_t j = 0; j < static_cast<std::size_t>(n_atoms); ++j) {
      std::vector<std::size_t> users;
      std::vector<std::size_t> coef_pos;
      for (std::size_t m = 0; m < n_signals; ++m) {
        for (std::size_t i = 0; i < codes[m].support.size(); ++i) {
          if (codes[m].support[i] == static_cast<int>(j) && codes[m].coefficients[i] != 0.0) {
            users.push_back(m);
            coef_pos.push_back(i);
            break;
          }
        }
      }

      if (users.empty()) {
        // Dead atom: reseed with the worst-represented training signal.
        std::size_t worst = n_signals;
        double worst_err = -1.0;
        for (std::size_t m = 0; m < n_signals; ++m) {
          if (signal_recycled[m]) continue;
          const double e = simd::active_kernels().sq_norm(residuals.row(m), n);
          if (e > worst_err) {
            worst_err = e;
            worst = m;
          }
        }
        if (worst == n_signals) continue;
        std::vector<double> seed = column(x, worst);
        const double nrm = std::sqrt(simd::sq_norm(seed));
        if (nrm <= 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) atoms(r, j) = seed[r] / nrm;
        fix_sign(atoms, j);
        signal_recycled[worst] = 1;
        continue;
      }

      // Restricted residual matrix with atom j's contribution added back,
      // stored column-per-user.
      Matrix err(users.size(), n);
      for (std::size_t u = 0; u < users.size(); ++u) {
        const std::size_t m = users[u];
        const double c = codes[m].coefficients[coef_pos[u]];
        const double* rm = residuals.row(m);
        double* em = err.row(u);
        for (std::size_t r = 0; r < n; ++r) em[r] = rm[r] + c * atoms(r, j);
      }

      // Rank-1 update by power iteration seeded with the current atom; the
      // Rayleigh quotient ascent keeps the objective non-increasing even
      // when stopped early.
      std::vector<double> u_vec = column(atoms, j);
      std::vector<double> weights(users.size());
      for (int pit = 0; pit < 200; ++pit) {
        for (std::size_t uu = 0; uu < users.size(); ++uu)
          weights[uu] = simd::active_kernels().dot(err.row(uu), u_vec.data(), n);
        std::vector<double> next(n, 0.0);
        for (std::size_t uu = 0; uu < users.size(); ++uu)
          simd::active_kernels().axpy(weights[uu], err.row(uu), next.data(), n);
        const double nrm = std::sqrt(simd::sq_norm(next));
        if (nrm <= 0.0) break;
        simd::scal(1.0 / nrm, next);
        const double drift = simd::sq_diff_sum(next, u_vec);
        u_vec = std::move(next);
        if (drift < 1e-26) break;
      }
      for (std::size_t uu = 0; uu < users.size(); ++uu)
        weights[uu] = simd::active_kernels().dot(err.row(uu), u_vec.data(), n);

      for (std::size_t r = 0; r < n; ++r) atoms(r, j) = u_vec[r];
      fix_sign(atoms, j, &weights);
      for (std::size_t uu = 0; uu < users.size(); ++uu) {
        const std::size_t m = users[uu];
        codes[m].coefficients[coef_pos[uu]] = weights[uu];
        double* rm = residuals.row(m);
        const double* em = err.row(uu);
        for (std::size_t r = 0; r < n; ++r) rm[r] = em[r] - weights[uu] * atoms(r, j);
      }
    }

    double tracked = 0.0;
    for (std::size_t m = 0; m < n_signals; ++m) tracked += simd::sq_norm(residuals.row_span(m));
    post_update_obj = std::sqrt(tracked);
  }

  dict.ksvd_iters = static_cast<int>(dict.ksvd_objective.size());
  return dict;
}

Dictionary build_mixed(const std::vector<Isrf>& uniform, const std::vector<Isrf>& scene,
                       int uniform_stride, int n_atoms, DictionaryMethod method, int k_sparse,
                       const KsvdOptions& opts) {
  require(uniform_stride >= 1, Errc::ConfigError, "uniform stride must be >= 1");
  std::vector<Isrf> training;
  for (std::size_t i = 0; i < uniform.size(); i += static_cast<std::size_t>(uniform_stride))
    training.push_back(uniform[i]);
  const int n_uniform = static_cast<int>(training.size());
  for (const Isrf& s : scene) training.push_back(s);
  require(!training.empty(), Errc::ConfigError, "mixed training selection is empty");

  Dictionary dict = method == DictionaryMethod::Svd
                        ? build_svd(training, n_atoms)
                        : build_ksvd(training, n_atoms, k_sparse, opts);
  dict.uniform_count = n_uniform;
  dict.scene_count = static_cast<int>(scene.size());
  dict.uniform_stride = uniform_stride;
  return dict;
}

double projection_error(const Dictionary& dict, const std::vector<Isrf>& training) {
  const Matrix x = training_matrix(training);
  double err_sq = 0.0;
  for (std::size_t m = 0; m < x.cols(); ++m) {
    const std::vector<double> signal = column(x, m);
    auto ls = linalg::solve_least_squares(dict.atoms, signal);
    std::vector<double> fit(x.rows(), 0.0);
    for (std::size_t j = 0; j < dict.atoms.cols(); ++j)
      for (std::size_t r = 0; r < x.rows(); ++r) fit[r] += ls.x[j] * dict.atoms(r, j);
    err_sq += simd::sq_diff_sum(signal, fit);
  }
  return std::sqrt(err_sq);
}

}  // namespace spirit
