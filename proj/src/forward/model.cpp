#include "spirit/forward/model.hpp"

#include <cmath>

#include "spirit/simd/kernels.hpp"

namespace spirit {

namespace {

// Whether the full offset span around center m fits in [lo, hi].
bool center_evaluable(const WavelengthGrid& grid, int m, double lo, double hi) {
  const double span = grid.n_half() * grid.delta();
  return grid.center(m) - span >= lo && grid.center(m) + span <= hi;
}

void fill_row(const ReferenceSpectrum& ref, const WavelengthGrid& grid, int m, double* row) {
  const double lambda = grid.center(m);
  // Entry for offset index i is r(lambda - (i - n_half)*delta): reference
  // samples in reverse wavelength order relative to the offset order of the
  // ISRF vector (convolution flip).
  for (int i = 0; i < grid.n_samples(); ++i) row[i] = ref(lambda - grid.offset(i));
}

}  // namespace

MeasurementSet convolve_forward(const ReferenceSpectrum& ref, const std::vector<Isrf>& isrfs,
                                const WavelengthGrid& grid) {
  const int n_centers = grid.n_centers();
  require(static_cast<int>(isrfs.size()) == n_centers, Errc::ConfigError,
          "need one ISRF per grid center");

  MeasurementSet out;
  out.values.assign(n_centers, 0.0);
  out.valid.assign(n_centers, 0);

  std::vector<double> row(grid.n_samples());
  int n_valid = 0;
  for (int l = 0; l < n_centers; ++l) {
    if (!center_evaluable(grid, l, ref.min_lambda(), ref.max_lambda())) continue;
    require(static_cast<int>(isrfs[l].values.size()) == grid.n_samples(), Errc::ConfigError,
            "ISRF sample count does not match grid");
    fill_row(ref, grid, l, row.data());
    out.values[l] = simd::dot(row, isrfs[l].values);
    out.valid[l] = 1;
    ++n_valid;
  }
  require(n_valid > 0, Errc::DomainTooSmall, "reference domain covers no grid center");
  return out;
}

WindowedOperator build_window_operator(const ReferenceSpectrum& ref, const WavelengthGrid& grid,
                                       int l, int n_obs) {
  require(n_obs >= 0 && n_obs % 2 == 0, Errc::ConfigError, "n_obs must be even and >= 0");
  const int h = n_obs / 2;
  require(l - h >= 0 && l + h < grid.n_centers(), Errc::OutOfRange,
          "window exceeds the center grid");
  for (int j = -h; j <= h; ++j)
    require(center_evaluable(grid, l + j, ref.min_lambda(), ref.max_lambda()), Errc::OutOfRange,
            "window row not evaluable over the reference domain");

  WindowedOperator op;
  op.center_index = l;
  op.half_width = h;
  op.matrix = Matrix(static_cast<std::size_t>(n_obs + 1),
                     static_cast<std::size_t>(grid.n_samples()));
  for (int j = -h; j <= h; ++j) fill_row(ref, grid, l + j, op.matrix.row(j + h));
  op.underdetermined = n_obs + 1 < grid.n_samples();
  return op;
}

std::pair<int, int> valid_range(const WavelengthGrid& grid, int n_obs, double ref_lo,
                                double ref_hi) {
  require(n_obs >= 0 && n_obs % 2 == 0, Errc::ConfigError, "n_obs must be even and >= 0");
  const int n = grid.n_centers();
  int m_lo = 0;
  while (m_lo < n && !center_evaluable(grid, m_lo, ref_lo, ref_hi)) ++m_lo;
  int m_hi = n - 1;
  while (m_hi >= 0 && !center_evaluable(grid, m_hi, ref_lo, ref_hi)) --m_hi;

  const int h = n_obs / 2;
  const int first = m_lo + h;
  const int last = m_hi - h;
  require(m_lo <= m_hi && first <= last, Errc::DomainTooSmall,
          "no center index admits a fully evaluable window");
  return {first, last};
}

std::pair<int, int> valid_range(const WavelengthGrid& grid, int n_obs,
                                const ReferenceSpectrum& ref) {
  return valid_range(grid, n_obs, ref.min_lambda(), ref.max_lambda());
}

ReferenceRows::ReferenceRows(const ReferenceSpectrum& ref, const WavelengthGrid& grid) {
  auto [first, last] = valid_range(grid, 0, ref);
  first_ = first;
  last_ = last;
  rows_ = Matrix(static_cast<std::size_t>(last - first + 1),
                 static_cast<std::size_t>(grid.n_samples()));
  for (int m = first; m <= last; ++m) fill_row(ref, grid, m, rows_.row(m - first));
}

}  // namespace spirit
