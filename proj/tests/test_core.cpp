#include <cmath>
#include <numbers>

#include "doctest.h"
#include "spirit/core/spline.hpp"
#include "spirit/core/template_set.hpp"
#include "synthetic.hpp"

using namespace spirit;
using testing::TestRng;

TEST_SUITE("core") {

TEST_CASE("normalize: uniform, delta, degenerate") {
  Isrf uniform{{1.0, 1.0, 1.0, 1.0}, 0.0};
  const Isrf n1 = normalize(uniform);
  for (double v : n1.values) CHECK(v == doctest::Approx(0.25));

  Isrf delta{{0.0, 2.0, 0.0}, 0.0};
  const Isrf n2 = normalize(delta);
  CHECK(n2.values[0] == 0.0);
  CHECK(n2.values[1] == doctest::Approx(1.0));
  CHECK(n2.values[2] == 0.0);

  Isrf zero{{0.0, 0.0, 0.0}, 0.0};
  CHECK_THROWS_AS(normalize(zero), Error);
}

TEST_CASE("normalize sums to 1 within 1e-12 and is idempotent bit-for-bit") {
  TestRng rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    Isrf isrf;
    isrf.values.resize(199);
    for (auto& v : isrf.values) v = rng.uniform(0.0, 3.0);
    const Isrf once = normalize(isrf);
    double sum = 0.0;
    for (double v : once.values) sum += v;
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
    const Isrf twice = normalize(once);
    CHECK(twice.values == once.values);  // exact
  }
}

TEST_CASE("spline reproduces knots exactly on y = x^3") {
  std::vector<std::pair<double, double>> knots;
  for (int i = 0; i < 10; ++i) {
    const double x = 3.0 * i / 9.0;
    knots.emplace_back(x, x * x * x);
  }
  const CubicSpline s = spline_fit(knots);
  for (const auto& [x, y] : knots) CHECK(s(x) == doctest::Approx(y).epsilon(1e-14));
}

TEST_CASE("spline reproduces a straight line at midpoints") {
  std::vector<std::pair<double, double>> knots;
  for (int i = 0; i < 8; ++i) {
    const double x = 0.3 * i;
    knots.emplace_back(x, 2.0 * x + 1.0);
  }
  const CubicSpline s = spline_fit(knots);
  for (int i = 0; i + 1 < 8; ++i) {
    const double mid = 0.3 * i + 0.15;
    CHECK(s(mid) == doctest::Approx(2.0 * mid + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("spline matches sin(x) to 1e-6 at midpoints with 50 knots") {
  std::vector<std::pair<double, double>> knots;
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    const double x = std::numbers::pi * i / (n - 1);
    knots.emplace_back(x, std::sin(x));
  }
  const CubicSpline s = spline_fit(knots);
  for (int i = 0; i + 1 < n; ++i) {
    const double mid = 0.5 * (knots[i].first + knots[i + 1].first);
    CHECK(std::fabs(s(mid) - std::sin(mid)) < 1e-6);
  }
}

TEST_CASE("spline reproduces cubics to 1e-9 on the interior third") {
  // Natural boundaries bend the ends; the effect decays geometrically inward.
  std::vector<std::pair<double, double>> knots;
  const int n = 61;
  auto p = [](double x) { return 0.3 * x * x * x - 1.2 * x * x + 0.7 * x + 0.5; };
  for (int i = 0; i < n; ++i) {
    const double x = 3.0 * i / (n - 1);
    knots.emplace_back(x, p(x));
  }
  const CubicSpline s = spline_fit(knots);
  TestRng rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const double x = rng.uniform(1.0, 2.0);  // interior third of [0, 3]
    CHECK(std::fabs(s(x) - p(x)) < 1e-9);
  }
}

TEST_CASE("spline rejects bad knots and out-of-domain evaluation") {
  CHECK_THROWS_AS(spline_fit({{0.0, 1.0}, {0.0, 2.0}, {1.0, 3.0}, {2.0, 0.0}}), Error);
  CHECK_THROWS_AS(spline_fit({{0.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}, {2.0, 0.0}}), Error);
  CHECK_THROWS_AS(spline_fit({{0.0, 1.0}, {1.0, 2.0}}), Error);  // too few

  const CubicSpline s = spline_fit({{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}, {3.0, 1.0}});
  CHECK_THROWS_AS(s(-0.1), Error);
  CHECK_THROWS_AS(s(3.1), Error);
  CHECK(s(0.0) == doctest::Approx(0.0));
  CHECK(s(3.0) == doctest::Approx(1.0));
}

TEST_CASE("interpolate_isrf_set: identical templates give the template everywhere") {
  WavelengthGrid grid(0.1, 4, {425.0, 450.0});
  std::vector<double> offsets;
  for (int i = -6; i <= 6; ++i) offsets.push_back(0.1 * i);
  std::vector<double> values;
  for (double x : offsets) values.push_back(std::exp(-x * x / 0.08));

  IsrfTemplateSet set;
  set.templates.push_back({400.0, offsets, values});
  set.templates.push_back({500.0, offsets, values});

  const auto isrfs = interpolate_isrf_set(set, grid);
  REQUIRE(isrfs.size() == 2);
  // Both outputs equal the (resampled, normalized) template.
  Isrf expected;
  expected.values.assign(values.begin() + 2, values.end() - 2);  // offsets -4..4
  expected = normalize(expected);
  for (const auto& isrf : isrfs)
    for (int i = 0; i < grid.n_samples(); ++i)
      CHECK(isrf.values[i] == doctest::Approx(expected.values[i]).epsilon(1e-10));
}

TEST_CASE("interpolate_isrf_set: sigma interpolates within 1% for a linear-width family") {
  WavelengthGrid grid(0.05, 40, {450.0});
  auto sigma_at = [](double c) { return 0.30 + 0.10 * (c - 400.0) / 200.0; };

  std::vector<double> tpl_offsets;
  for (int i = -50; i <= 50; ++i) tpl_offsets.push_back(0.05 * i);
  IsrfTemplateSet set;
  for (double c : {400.0, 440.0, 480.0, 520.0, 560.0, 600.0}) {
    std::vector<double> v;
    const double s = sigma_at(c);
    for (double x : tpl_offsets) v.push_back(std::exp(-x * x / (2.0 * s * s)));
    set.templates.push_back({c, tpl_offsets, v});
  }

  const auto isrfs = interpolate_isrf_set(set, grid);
  REQUIRE(isrfs.size() == 1);
  // Estimate sigma from the second central moment of the output.
  double mass = 0.0, mean = 0.0;
  for (int i = 0; i < grid.n_samples(); ++i) {
    mass += isrfs[0].values[i];
    mean += isrfs[0].values[i] * grid.offset(i);
  }
  mean /= mass;
  double var = 0.0;
  for (int i = 0; i < grid.n_samples(); ++i) {
    const double d = grid.offset(i) - mean;
    var += isrfs[0].values[i] * d * d;
  }
  var /= mass;
  CHECK(std::sqrt(var) == doctest::Approx(sigma_at(450.0)).epsilon(0.01));
}

TEST_CASE("interpolate_isrf_set error paths") {
  std::vector<double> offsets = {-1.0, 0.0, 1.0};
  std::vector<double> values = {0.2, 1.0, 0.2};
  WavelengthGrid grid(0.5, 1, {450.0});

  IsrfTemplateSet single;
  single.templates.push_back({400.0, offsets, values});
  CHECK_THROWS_AS(interpolate_isrf_set(single, grid), Error);

  IsrfTemplateSet outside;
  outside.templates.push_back({460.0, offsets, values});
  outside.templates.push_back({500.0, offsets, values});
  CHECK_THROWS_AS(interpolate_isrf_set(outside, grid), Error);  // 450 not bracketed

  IsrfTemplateSet narrow;  // offsets do not span the grid
  WavelengthGrid wide_grid(1.0, 2, {450.0});
  narrow.templates.push_back({400.0, offsets, values});
  narrow.templates.push_back({500.0, offsets, values});
  CHECK_THROWS_AS(interpolate_isrf_set(narrow, wide_grid), Error);
}

TEST_CASE("interpolate_isrf_set outputs are normalized and non-negative") {
  testing::Instrument inst = testing::make_instrument(24, 16, 0.01, 99);
  IsrfTemplateSet set;
  const auto offsets = inst.grid.offsets();
  for (const Isrf& isrf : inst.truth)
    set.templates.push_back({isrf.center, offsets, isrf.values});
  WavelengthGrid inner(inst.grid.delta(), inst.grid.n_half(),
                       {inst.grid.center(3) + 0.002, inst.grid.center(12) + 0.004});
  const auto out = interpolate_isrf_set(set, inner);
  for (const auto& isrf : out) {
    double sum = 0.0;
    for (double v : isrf.values) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(WavelengthGrid(0.0, 4, {1.0}), Error);
  CHECK_THROWS_AS(WavelengthGrid(0.1, 4, {}), Error);
  CHECK_THROWS_AS(WavelengthGrid(0.1, 4, {2.0, 1.0}), Error);
  const WavelengthGrid g(0.5, 2, {400.0, 401.0});
  CHECK(g.n_samples() == 5);
  CHECK(g.offset(0) == doctest::Approx(-1.0));
  CHECK(g.offset(4) == doctest::Approx(1.0));
}

}  // TEST_SUITE
