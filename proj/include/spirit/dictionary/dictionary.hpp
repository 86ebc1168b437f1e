#pragma once

#include <string>
#include <vector>

#include "spirit/core/isrf.hpp"
#include "spirit/core/matrix.hpp"

namespace spirit {

enum class DictionaryMethod { Svd, Ksvd };

const char* dictionary_method_name(DictionaryMethod m);
DictionaryMethod parse_dictionary_method(const std::string& name);

/// Atom dictionary for sparse ISRF decomposition. Atoms are the columns of
/// a (n_samples x n_atoms) matrix, all unit Euclidean norm; SVD-built
/// dictionaries additionally have mutually orthogonal atoms.
struct Dictionary {
  Matrix atoms;  // rows = offset samples, cols = atoms
  DictionaryMethod method = DictionaryMethod::Svd;
  int n_atoms = 0;
  // training metadata
  int training_count = 0;
  int uniform_count = 0;     // mixed builds only
  int scene_count = 0;       // mixed builds only
  int uniform_stride = 1;    // mixed builds only
  int ksvd_k_sparse = 0;
  int ksvd_iters = 0;
  std::vector<double> singular_values;     // SVD energies (svd builds / ksvd init)
  std::vector<double> ksvd_objective;      // ||X - Phi A||_F after each coding pass
  std::string source;

  std::span<const double> atom_row(std::size_t r) const { return atoms.row_span(r); }
  std::vector<double> atom(int j) const {
    std::vector<double> a(atoms.rows());
    for (std::size_t r = 0; r < atoms.rows(); ++r) a[r] = atoms(r, static_cast<std::size_t>(j));
    return a;
  }
};

struct KsvdOptions {
  int iters = 20;
  double rel_improvement_stop = 1e-4;  // stop when relative objective gain drops below
};

/// Atoms = leading left singular vectors of the training matrix (columns =
/// discrete-sum-normalized training ISRFs), ordered by decreasing singular
/// value, sign-fixed so each atom's largest-magnitude entry is positive.
/// Throws RankDeficient when n_atoms exceeds min(n_samples, n_training).
Dictionary build_svd(const std::vector<Isrf>& training, int n_atoms);

/// K-SVD refinement starting from the SVD dictionary: alternate sparse coding
/// of all training signals (pursuit at k_sparse, guarded so the recorded
/// objective never increases) with sequential rank-1 atom updates on the
/// residual matrix restricted to each atom's users. Unused atoms are replaced
/// by the worst-represented training signal.
Dictionary build_ksvd(const std::vector<Isrf>& training, int n_atoms, int k_sparse,
                      const KsvdOptions& opts = {});

/// Training set = every stride-th uniform ISRF plus all scene ISRFs,
/// delegated to build_svd / build_ksvd; composition recorded in metadata.
Dictionary build_mixed(const std::vector<Isrf>& uniform, const std::vector<Isrf>& scene,
                       int uniform_stride, int n_atoms, DictionaryMethod method,
                       int k_sparse = 0, const KsvdOptions& opts = {});

/// Frobenius reconstruction error of the training set in the dictionary's
/// span (projection for SVD dictionaries).
double projection_error(const Dictionary& dict, const std::vector<Isrf>& training);

}  // namespace spirit
