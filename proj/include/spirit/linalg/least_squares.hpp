#pragma once

#include <span>
#include <vector>

#include "spirit/core/matrix.hpp"

namespace spirit::linalg {

struct LsSolution {
  std::vector<double> x;
  int rank = 0;
  bool rank_deficient = false;  // minimum-norm solution was used
};

/// Minimum-norm least-squares solution of A x ~= b through a rank-revealing
/// complete orthogonal decomposition.
LsSolution solve_least_squares(MatView a, std::span<const double> b);

/// Least squares restricted to a column subset of A (columns picked by
/// `support`, in that order).
LsSolution solve_least_squares_on_support(MatView a, std::span<const double> b,
                                          std::span<const int> support);

struct ThinSvd {
  Matrix u;                            // rows x k, orthonormal columns
  std::vector<double> singular_values; // descending
};

/// Thin SVD of a row-major matrix, first k left singular vectors.
ThinSvd thin_svd(MatView a, int k);

}  // namespace spirit::linalg
