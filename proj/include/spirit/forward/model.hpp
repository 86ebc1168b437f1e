#pragma once

#include <utility>
#include <vector>

#include "spirit/core/grid.hpp"
#include "spirit/core/isrf.hpp"
#include "spirit/core/matrix.hpp"
#include "spirit/core/spline.hpp"
#include "spirit/forward/measurement.hpp"

namespace spirit {

/// Discrete forward operator for one sliding window: row j (j = 0..n_obs)
/// holds the reference samples r(lambda_{l - n_obs/2 + j} - n*delta) in
/// increasing ISRF-offset order, so that (matrix * isrf) reproduces the
/// measurement at each neighboring center under the shared-shape assumption.
struct WindowedOperator {
  Matrix matrix;        // (n_obs+1) x (n_samples)
  int center_index = 0; // l
  int half_width = 0;   // n_obs/2
  /// True when the window has fewer rows than ISRF samples; the problem is
  /// then underdetermined in sample space and relies on the dictionary.
  bool underdetermined = false;
};

/// Noise-free synthesis: s(lambda_l) = sum_n r(lambda_l - n*delta) * I_l(n*delta)
/// for every center whose full offset span lies inside the reference domain;
/// other entries are flagged invalid. Throws DomainTooSmall when no center
/// is evaluable.
MeasurementSet convolve_forward(const ReferenceSpectrum& ref, const std::vector<Isrf>& isrfs,
                                const WavelengthGrid& grid);

/// Build the operator for center index l. n_obs must be even and >= 0;
/// throws OutOfRange when any row of the window is not evaluable.
WindowedOperator build_window_operator(const ReferenceSpectrum& ref, const WavelengthGrid& grid,
                                       int l, int n_obs);

/// Largest contiguous 0-based index range [first, last] such that every row
/// of every windowed operator in the range is evaluable over the reference
/// domain [ref_lo, ref_hi]. Throws DomainTooSmall when empty.
std::pair<int, int> valid_range(const WavelengthGrid& grid, int n_obs, double ref_lo,
                                double ref_hi);
std::pair<int, int> valid_range(const WavelengthGrid& grid, int n_obs,
                                const ReferenceSpectrum& ref);

/// Precomputed reference rows shared by all windows: row for center index m
/// holds r(lambda_m - n*delta) in increasing offset order. Centers outside
/// the evaluable range have no rows (query via first/last).
class ReferenceRows {
 public:
  ReferenceRows(const ReferenceSpectrum& ref, const WavelengthGrid& grid);

  int first() const { return first_; }
  int last() const { return last_; }
  bool has(int m) const { return m >= first_ && m <= last_; }
  std::span<const double> row(int m) const { return rows_.row_span(m - first_); }
  /// Contiguous block of rows [m_first, m_first+count) as an operator view.
  MatView block(int m_first, int count) const {
    return rows_.rows_view(static_cast<std::size_t>(m_first - first_),
                           static_cast<std::size_t>(count));
  }
  int n_cols() const { return static_cast<int>(rows_.cols()); }

 private:
  int first_ = 0, last_ = -1;
  Matrix rows_;
};

}  // namespace spirit
