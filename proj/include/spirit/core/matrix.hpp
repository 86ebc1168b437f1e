#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spirit {

/// Non-owning const view of a row-major matrix block (rows are contiguous).
struct MatView {
  const double* data = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;

  const double* row(std::size_t r) const { return data + r * cols; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const double> row_span(std::size_t r) const { return {row(r), cols}; }
};

/// Owning row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return d_.empty(); }

  double* row(std::size_t r) { return d_.data() + r * cols_; }
  const double* row(std::size_t r) const { return d_.data() + r * cols_; }
  double& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  double* data() { return d_.data(); }
  const double* data() const { return d_.data(); }

  std::span<const double> row_span(std::size_t r) const { return {row(r), cols_}; }

  operator MatView() const { return {d_.data(), rows_, cols_}; }
  MatView view() const { return {d_.data(), rows_, cols_}; }
  /// View of `count` consecutive rows starting at `first`.
  MatView rows_view(std::size_t first, std::size_t count) const {
    return {d_.data() + first * cols_, count, cols_};
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> d_;
};

}  // namespace spirit
