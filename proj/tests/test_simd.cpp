#include <cmath>
#include <vector>

#include "doctest.h"
#include "spirit/simd/kernels.hpp"
#include "synthetic.hpp"

using namespace spirit;
using testing::TestRng;

namespace {

std::vector<double> random_vec(std::size_t n, TestRng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-2.0, 2.0);
  return v;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("active kernel table is usable") {
  const auto& k = simd::active_kernels();
  CHECK(k.name != nullptr);
  const std::vector<double> a = {1.0, 2.0, 3.0};
  CHECK(k.sum(a.data(), a.size()) == doctest::Approx(6.0));
}

TEST_CASE("avx2 kernels match the scalar reference on every entry point") {
  const simd::Kernels* avx2 = simd::avx2_kernels();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 unavailable on this host; scalar-only");
    return;
  }
  const auto& ref = simd::scalar_kernels();
  TestRng rng(0x51);
  // Lengths around the vector width cover every tail path.
  for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{4}, std::size_t{7},
                        std::size_t{8}, std::size_t{15}, std::size_t{64}, std::size_t{257},
                        std::size_t{1000}}) {
    for (int rep = 0; rep < 8; ++rep) {
      const std::vector<double> a = random_vec(n, rng);
      const std::vector<double> b = random_vec(n, rng);
      const double scale = 1.0 + static_cast<double>(n);

      CHECK(avx2->dot(a.data(), b.data(), n) ==
            doctest::Approx(ref.dot(a.data(), b.data(), n)).epsilon(1e-13));
      CHECK(avx2->sum(a.data(), n) == doctest::Approx(ref.sum(a.data(), n)).epsilon(1e-13));
      CHECK(avx2->abs_sum(a.data(), n) ==
            doctest::Approx(ref.abs_sum(a.data(), n)).epsilon(1e-13));
      CHECK(avx2->sq_norm(a.data(), n) ==
            doctest::Approx(ref.sq_norm(a.data(), n)).epsilon(1e-13));
      CHECK(avx2->abs_diff_sum(a.data(), b.data(), n) ==
            doctest::Approx(ref.abs_diff_sum(a.data(), b.data(), n)).epsilon(1e-13));
      CHECK(avx2->sq_diff_sum(a.data(), b.data(), n) ==
            doctest::Approx(ref.sq_diff_sum(a.data(), b.data(), n)).epsilon(1e-13));

      std::vector<double> y1 = b, y2 = b;
      avx2->axpy(scale, a.data(), y1.data(), n);
      ref.axpy(scale, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));

      std::vector<double> s1 = a, s2 = a;
      avx2->scal(scale, s1.data(), n);
      ref.scal(scale, s2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == s2[i]);  // same single multiply
    }
  }
}

TEST_CASE("matvec agrees with per-row dots") {
  TestRng rng(7);
  Matrix m(5, 13);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 13; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
  const std::vector<double> x = random_vec(13, rng);
  std::vector<double> y(5);
  simd::matvec(m, x, y);
  for (std::size_t r = 0; r < 5; ++r)
    CHECK(y[r] == doctest::Approx(simd::dot(m.row_span(r), x)));
}

TEST_CASE("matvec_t agrees with explicit transpose") {
  TestRng rng(8);
  Matrix m(6, 4);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
  const std::vector<double> x = random_vec(6, rng);
  std::vector<double> y(4);
  simd::matvec_t(m, x, y);
  const Matrix t = m.transposed();
  std::vector<double> expected(4);
  simd::matvec(t, x, expected);
  for (std::size_t c = 0; c < 4; ++c) CHECK(y[c] == doctest::Approx(expected[c]));
}

}  // TEST_SUITE
