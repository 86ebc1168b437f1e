#pragma once

#include <utility>
#include <vector>

#include "spirit/common.hpp"

namespace spirit {

/// Interpolating natural cubic spline (zero second derivative at both ends).
/// Degenerates gracefully: two knots give the straight line, three knots the
/// unique natural cubic. Evaluation outside [min_x, max_x] throws OutOfRange.
class CubicSpline {
 public:
  CubicSpline() = default;
  /// Knots must be strictly increasing in x (InvalidKnots otherwise), >= 2 points.
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double min_x() const { return x_.front(); }
  double max_x() const { return x_.back(); }
  std::size_t n_knots() const { return x_.size(); }
  bool contains(double x) const { return x >= x_.front() && x <= x_.back(); }

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

/// Fit contract for reference-style data: requires >= 4 knots.
CubicSpline spline_fit(const std::vector<std::pair<double, double>>& knots);

/// Spline-backed continuous reference spectrum r(lambda).
class ReferenceSpectrum {
 public:
  ReferenceSpectrum() = default;
  explicit ReferenceSpectrum(std::vector<std::pair<double, double>> knots)
      : knots_(std::move(knots)), spline_(make_spline(knots_)) {}

  double operator()(double lambda) const { return spline_(lambda); }
  double min_lambda() const { return spline_.min_x(); }
  double max_lambda() const { return spline_.max_x(); }
  bool covers(double lo, double hi) const { return lo >= min_lambda() && hi <= max_lambda(); }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

 private:
  static CubicSpline make_spline(const std::vector<std::pair<double, double>>& knots) {
    return spline_fit(knots);
  }
  std::vector<std::pair<double, double>> knots_;
  CubicSpline spline_;
};

}  // namespace spirit
