#pragma once

#include <vector>

#include "spirit/common.hpp"

namespace spirit {

/// Regular ISRF offset grid delta*{-n_half..+n_half} plus the per-pixel
/// center wavelengths. Offsets always have an odd sample count (2*n_half+1);
/// center spacing is arbitrary but strictly increasing.
class WavelengthGrid {
 public:
  WavelengthGrid(double delta, int n_half, std::vector<double> centers)
      : delta_(delta), n_half_(n_half), centers_(std::move(centers)) {
    require(delta_ > 0.0, Errc::ConfigError, "grid delta must be > 0");
    require(n_half_ >= 1, Errc::ConfigError, "grid n_half must be >= 1");
    require(!centers_.empty(), Errc::ConfigError, "grid needs at least one center");
    for (std::size_t i = 1; i < centers_.size(); ++i)
      require(centers_[i] > centers_[i - 1], Errc::ConfigError,
              "grid centers must be strictly increasing");
  }

  double delta() const { return delta_; }
  int n_half() const { return n_half_; }
  int n_samples() const { return 2 * n_half_ + 1; }
  /// Offset of sample i (i in [0, n_samples)), i.e. (i - n_half)*delta.
  double offset(int i) const { return (i - n_half_) * delta_; }
  std::vector<double> offsets() const {
    std::vector<double> o(n_samples());
    for (int i = 0; i < n_samples(); ++i) o[i] = offset(i);
    return o;
  }

  const std::vector<double>& centers() const { return centers_; }
  int n_centers() const { return static_cast<int>(centers_.size()); }
  double center(int l) const { return centers_[l]; }

 private:
  double delta_;
  int n_half_;
  std::vector<double> centers_;
};

}  // namespace spirit
