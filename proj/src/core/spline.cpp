#include "spirit/core/spline.hpp"

#include <algorithm>
#include <cmath>

namespace spirit {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  require(n >= 2 && y_.size() == n, Errc::InvalidKnots, "need >= 2 knots");
  for (std::size_t i = 0; i + 1 < n; ++i)
    require(x_[i + 1] > x_[i], Errc::InvalidKnots, "knot x must be strictly increasing");

  m_.assign(n, 0.0);
  if (n <= 2) return;

  // Thomas solve of the tridiagonal system for interior second derivatives;
  // natural boundaries pin m_0 = m_{n-1} = 0.
  const std::size_t k = n - 2;
  std::vector<double> diag(k), rhs(k), upper(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double h0 = x_[i + 1] - x_[i];
    const double h1 = x_[i + 2] - x_[i + 1];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 2] - y_[i + 1]) / h1 - (y_[i + 1] - y_[i]) / h0);
  }
  for (std::size_t i = 1; i < k; ++i) {
    const double lower = x_[i + 1] - x_[i];
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[k] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i >= 1; --i)
    m_[i] = (rhs[i - 1] - upper[i - 1] * m_[i + 1]) / diag[i - 1];
}

double CubicSpline::operator()(double x) const {
  require(!x_.empty(), Errc::InvalidKnots, "empty spline");
  require(x >= x_.front() && x <= x_.back(), Errc::OutOfRange,
          "spline evaluated outside knot range");
  // Interval containing x: x_[i] <= x <= x_[i+1].
  std::size_t i = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
  i = (i == 0) ? 0 : i - 1;
  if (i + 1 >= x_.size()) i = x_.size() - 2;

  const double h = x_[i + 1] - x_[i];
  const double t = x - x_[i];
  const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
  const double c = m_[i] / 2.0;
  const double d = (m_[i + 1] - m_[i]) / (6.0 * h);
  return y_[i] + t * (b + t * (c + t * d));
}

CubicSpline spline_fit(const std::vector<std::pair<double, double>>& knots) {
  require(knots.size() >= 4, Errc::InvalidKnots, "spline_fit needs >= 4 knots");
  std::vector<double> x(knots.size()), y(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    x[i] = knots[i].first;
    y[i] = knots[i].second;
  }
  return CubicSpline(std::move(x), std::move(y));
}

}  // namespace spirit
