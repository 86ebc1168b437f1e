#include "spirit/linalg/least_squares.hpp"

#include <Eigen/Dense>

#include "spirit/common.hpp"

namespace spirit::linalg {

namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

LsSolution solve_eigen(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  Eigen::VectorXd x = cod.solve(b);
  LsSolution out;
  out.x.assign(x.data(), x.data() + x.size());
  out.rank = static_cast<int>(cod.rank());
  out.rank_deficient = cod.rank() < std::min(a.rows(), a.cols());
  return out;
}

}  // namespace

LsSolution solve_least_squares(MatView a, std::span<const double> b) {
  require(b.size() == a.rows, Errc::ConfigError, "rhs length does not match matrix rows");
  RowMajorMap am(a.data, static_cast<Eigen::Index>(a.rows), static_cast<Eigen::Index>(a.cols));
  Eigen::Map<const Eigen::VectorXd> bm(b.data(), static_cast<Eigen::Index>(b.size()));
  return solve_eigen(am, bm);
}

LsSolution solve_least_squares_on_support(MatView a, std::span<const double> b,
                                          std::span<const int> support) {
  require(b.size() == a.rows, Errc::ConfigError, "rhs length does not match matrix rows");
  Eigen::MatrixXd sub(a.rows, support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    const int col = support[j];
    require(col >= 0 && static_cast<std::size_t>(col) < a.cols, Errc::OutOfRange,
            "support index outside dictionary");
    for (std::size_t r = 0; r < a.rows; ++r) sub(static_cast<Eigen::Index>(r), j) = a(r, col);
  }
  Eigen::Map<const Eigen::VectorXd> bm(b.data(), static_cast<Eigen::Index>(b.size()));
  return solve_eigen(sub, bm);
}

ThinSvd thin_svd(MatView a, int k) {
  RowMajorMap am(a.data, static_cast<Eigen::Index>(a.rows), static_cast<Eigen::Index>(a.cols));
  require(k >= 1 && k <= static_cast<int>(std::min(a.rows, a.cols)), Errc::RankDeficient,
          "requested more singular vectors than min(rows, cols)");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(am, Eigen::ComputeThinU);
  ThinSvd out;
  out.u = Matrix(a.rows, static_cast<std::size_t>(k));
  for (std::size_t r = 0; r < a.rows; ++r)
    for (int c = 0; c < k; ++c) out.u(r, c) = svd.matrixU()(static_cast<Eigen::Index>(r), c);
  out.singular_values.assign(svd.singularValues().data(),
                             svd.singularValues().data() + std::min<std::size_t>(
                                 k, static_cast<std::size_t>(svd.singularValues().size())));
  return out;
}

}  // namespace spirit::linalg
