#pragma once

#include <cstddef>
#include <span>

#include "spirit/core/matrix.hpp"

namespace spirit::simd {

/// Double-precision vector kernels used by the numerical inner loops
/// (window dot products, pursuit correlations, coordinate-descent updates,
/// error reductions). One scalar reference implementation, plus an AVX2/FMA
/// variant selected at runtime when the CPU supports it.
///
/// SIMD variants reduce with multiple accumulators, so results can differ
/// from the scalar path by a few ulps; equivalence is tested to tolerance,
/// not bit-exactly.
struct Kernels {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);  // y += alpha*x
  void (*scal)(double alpha, double* x, std::size_t n);                   // x *= alpha
  double (*sum)(const double* a, std::size_t n);
  double (*abs_sum)(const double* a, std::size_t n);
  double (*sq_norm)(const double* a, std::size_t n);                       // sum a_i^2
  double (*abs_diff_sum)(const double* a, const double* b, std::size_t n); // sum |a_i-b_i|
  double (*sq_diff_sum)(const double* a, const double* b, std::size_t n);  // sum (a_i-b_i)^2
};

/// Scalar reference kernels; always available, the oracle for equivalence tests.
const Kernels& scalar_kernels();

/// AVX2+FMA kernels, or nullptr when the binary or CPU lacks support.
const Kernels* avx2_kernels();

/// Kernels selected at startup: AVX2 when available, else scalar.
/// SPIRIT_KERNELS=scalar|avx2 overrides the choice (unsupported value or
/// unavailable backend falls back to scalar).
const Kernels& active_kernels();

// -- convenience wrappers over the active table --

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}
inline void scal(double alpha, std::span<double> x) {
  active_kernels().scal(alpha, x.data(), x.size());
}
inline double sum(std::span<const double> a) { return active_kernels().sum(a.data(), a.size()); }
inline double abs_sum(std::span<const double> a) {
  return active_kernels().abs_sum(a.data(), a.size());
}
inline double sq_norm(std::span<const double> a) {
  return active_kernels().sq_norm(a.data(), a.size());
}
inline double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
  return active_kernels().abs_diff_sum(a.data(), b.data(), a.size());
}
inline double sq_diff_sum(std::span<const double> a, std::span<const double> b) {
  return active_kernels().sq_diff_sum(a.data(), b.data(), a.size());
}

/// y = M x, row-major: one dot per row.
inline void matvec(MatView m, std::span<const double> x, std::span<double> y) {
  const Kernels& k = active_kernels();
  for (std::size_t r = 0; r < m.rows; ++r) y[r] = k.dot(m.row(r), x.data(), m.cols);
}

/// y = M^T x for row-major M: accumulate rows scaled by x_r.
inline void matvec_t(MatView m, std::span<const double> x, std::span<double> y) {
  const Kernels& k = active_kernels();
  for (std::size_t c = 0; c < m.cols; ++c) y[c] = 0.0;
  for (std::size_t r = 0; r < m.rows; ++r) k.axpy(x[r], m.row(r), y.data(), m.cols);
}

}  // namespace spirit::simd
