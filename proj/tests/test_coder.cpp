#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spirit/coder/coder.hpp"
#include "spirit/linalg/least_squares.hpp"
#include "spirit/simd/kernels.hpp"
#include "synthetic.hpp"

using namespace spirit;
using testing::TestRng;

namespace {

std::vector<double> column_combo(const Matrix& m, const std::vector<int>& support,
                                 const std::vector<double>& coefs) {
  std::vector<double> s(m.rows(), 0.0);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r)
      s[r] += coefs[i] * m(r, static_cast<std::size_t>(support[i]));
  return s;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

double residual_of(MatView psi, std::span<const double> s, const SparseCode& code) {
  std::vector<double> r(s.begin(), s.end());
  for (std::size_t i = 0; i < code.support.size(); ++i)
    for (std::size_t row = 0; row < psi.rows; ++row)
      r[row] -= code.coefficients[i] * psi(row, static_cast<std::size_t>(code.support[i]));
  return std::sqrt(simd::sq_norm(r));
}

// Exhaustive best-support oracle for small instances.
struct ExhaustiveBest {
  std::vector<int> support;
  std::vector<double> coefficients;
  double residual = 1e300;
};

void search_supports(MatView psi, std::span<const double> s, int k, std::vector<int>& cur,
                     int next, ExhaustiveBest& best) {
  if (static_cast<int>(cur.size()) == k) {
    auto ls = linalg::solve_least_squares_on_support(psi, s, cur);
    SparseCode code;
    code.support = cur;
    code.coefficients = ls.x;
    const double r = residual_of(psi, s, code);
    if (r < best.residual) {
      best.residual = r;
      best.support = cur;
      best.coefficients = ls.x;
    }
    return;
  }
  for (int j = next; j < static_cast<int>(psi.cols); ++j) {
    cur.push_back(j);
    search_supports(psi, s, k, cur, j + 1, best);
    cur.pop_back();
  }
}

}  // namespace

TEST_SUITE("coder") {

TEST_CASE("omp picks a pure column immediately") {
  const Matrix psi = testing::random_orthonormal(12, 6, 21);
  std::vector<double> s(12);
  for (std::size_t r = 0; r < 12; ++r) s[r] = 3.0 * psi(r, 2);
  const SparseCode code = omp(psi, s, 1);
  REQUIRE(code.support == std::vector<int>{2});
  CHECK(code.coefficients[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(code.residual_norm < 1e-12);
}

TEST_CASE("omp on a signal orthogonal to every column: tie rule picks index 0, alpha 0") {
  Matrix psi(4, 3, 0.0);
  psi(0, 0) = 1.0;
  psi(1, 1) = 1.0;
  psi(2, 2) = 1.0;
  const std::vector<double> s = {0.0, 0.0, 0.0, 2.0};  // orthogonal to all columns
  const SparseCode code = omp(psi, s, 1);
  REQUIRE(code.support == std::vector<int>{0});
  CHECK(code.coefficients[0] == 0.0);
  CHECK(code.residual_norm == doctest::Approx(2.0));
}

TEST_CASE("omp exact recovery on orthonormal designs, checked against exhaustive search") {
  TestRng rng(33);
  for (int inst = 0; inst < 6; ++inst) {
    const std::size_t n_atoms = 12;
    const Matrix psi = testing::random_orthonormal(20, n_atoms, 100 + inst);
    std::vector<int> truth_support;
    while (truth_support.size() < 3) {
      const int j = static_cast<int>(rng.uniform() * n_atoms) % n_atoms;
      if (std::find(truth_support.begin(), truth_support.end(), j) == truth_support.end())
        truth_support.push_back(j);
    }
    std::vector<double> truth_coefs;
    for (int i = 0; i < 3; ++i)
      truth_coefs.push_back(rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0));
    const std::vector<double> s = column_combo(psi, truth_support, truth_coefs);

    const SparseCode code = omp(psi, s, 3);
    CHECK(sorted(code.support) == sorted(truth_support));
    for (std::size_t i = 0; i < code.support.size(); ++i) {
      const auto it =
          std::find(truth_support.begin(), truth_support.end(), code.support[i]);
      REQUIRE(it != truth_support.end());
      const double expected = truth_coefs[static_cast<std::size_t>(it - truth_support.begin())];
      CHECK(code.coefficients[i] == doctest::Approx(expected).epsilon(1e-10));
    }

    ExhaustiveBest best;
    std::vector<int> cur;
    search_supports(psi, s, 3, cur, 0, best);
    CHECK(sorted(best.support) == sorted(code.support));
    CHECK(code.residual_norm <= best.residual + 1e-10);
  }
}

TEST_CASE("omp residual decreases strictly while selections remain") {
  TestRng rng(44);
  Matrix psi(16, 10);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 10; ++c) psi(r, c) = rng.gaussian();
  std::vector<double> s(16);
  for (auto& v : s) v = rng.gaussian();

  double prev = std::sqrt(simd::sq_norm(s));
  for (int k = 1; k <= 8; ++k) {
    const SparseCode code = omp(psi, s, k);
    if (code.residual_norm >= 1e-14) CHECK(code.residual_norm < prev);
    prev = code.residual_norm;
  }
}

TEST_CASE("lasso: full shrinkage above the threshold penalty") {
  const Matrix psi = testing::random_orthonormal(14, 7, 51);
  TestRng rng(52);
  std::vector<double> s(14);
  for (auto& v : s) v = rng.gaussian();

  const Matrix psi_t = psi.transposed();
  double max_corr = 0.0;
  for (std::size_t j = 0; j < 7; ++j)
    max_corr = std::max(max_corr, std::fabs(simd::dot(psi_t.row_span(j), s)));
  const SparseCode code = lasso(psi, s, 2.0 * max_corr * 1.0001);
  CHECK(code.k() == 0);
  CHECK(code.residual_norm == doctest::Approx(std::sqrt(simd::sq_norm(s))));
}

TEST_CASE("lasso matches the orthonormal soft-threshold closed form") {
  TestRng rng(61);
  for (int inst = 0; inst < 5; ++inst) {
    const Matrix psi = testing::random_orthonormal(18, 9, 200 + inst);
    std::vector<double> s(18);
    for (auto& v : s) v = rng.gaussian();
    const double gamma = rng.uniform(0.1, 1.5);

    const SparseCode code = lasso(psi, s, gamma);
    const std::vector<double> dense = code.dense(9);
    const Matrix psi_t = psi.transposed();
    for (std::size_t j = 0; j < 9; ++j) {
      const double c = simd::dot(psi_t.row_span(j), s);
      const double expected =
          c > gamma / 2.0 ? c - gamma / 2.0 : (c < -gamma / 2.0 ? c + gamma / 2.0 : 0.0);
      CHECK(dense[j] == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("lasso with gamma 0 solves a square full-rank system") {
  TestRng rng(71);
  Matrix psi(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) psi(r, c) = rng.gaussian() + (r == c ? 3.0 : 0.0);
  std::vector<double> s(6);
  for (auto& v : s) v = rng.gaussian();
  const SparseCode code = lasso(psi, s, 0.0);
  CHECK(code.residual_norm < 1e-8);
  CHECK_FALSE(code.underdetermined);
}

TEST_CASE("lasso objective is non-increasing across coordinate sweeps") {
  TestRng rng(81);
  Matrix psi(20, 8);
  for (std::size_t r = 0; r < 20; ++r)
    for (std::size_t c = 0; c < 8; ++c) psi(r, c) = rng.gaussian();
  std::vector<double> s(20);
  for (auto& v : s) v = rng.gaussian();
  const double gamma = 0.7;

  auto objective = [&](const SparseCode& code) {
    double l1 = 0.0;
    for (double c : code.coefficients) l1 += std::fabs(c);
    const double r = residual_of(psi, s, code);
    return r * r + gamma * l1;
  };

  double prev = simd::sq_norm(s);  // zero-coefficient objective
  for (long sweeps = 1; sweeps <= 12; ++sweeps) {
    LassoOptions opts;
    opts.max_sweeps = sweeps;
    opts.tol = 0.0;
    const double obj = objective(lasso(psi, s, gamma, opts));
    CHECK(obj <= prev * (1.0 + 1e-12) + 1e-15);
    prev = obj;
  }
}

TEST_CASE("lasso_target_k hits the requested support size on generic instances") {
  TestRng rng(91);
  for (int inst = 0; inst < 5; ++inst) {
    Matrix psi(24, 10);
    for (std::size_t r = 0; r < 24; ++r)
      for (std::size_t c = 0; c < 10; ++c) psi(r, c) = rng.gaussian();
    std::vector<double> s(24);
    for (auto& v : s) v = rng.gaussian();

    const int k = 4;
    const SparseCode code = lasso_target_k(psi, s, k);

    // Oracle: scan a fine gamma grid to collect achievable support sizes.
    std::vector<int> achievable;
    const Matrix psi_t = psi.transposed();
    double gamma_hi = 0.0;
    for (std::size_t j = 0; j < 10; ++j)
      gamma_hi = std::max(gamma_hi, 2.0 * std::fabs(simd::dot(psi_t.row_span(j), s)));
    for (int g = 0; g <= 400; ++g)
      achievable.push_back(lasso(psi, s, gamma_hi * g / 400.0).k());

    const int best_achievable = *std::min_element(
        achievable.begin(), achievable.end(), [&](int a, int b) {
          return std::abs(a - k) < std::abs(b - k);
        });
    CHECK(std::abs(code.k() - k) <= std::max(1, std::abs(best_achievable - k)));
    if (code.k() == k) CHECK_FALSE(code.target_k_missed);
  }
}

TEST_CASE("lasso_target_k trivial cases") {
  // Overdetermined full-rank design, k = n_atoms: gamma -> 0 gives full support.
  TestRng rng(95);
  Matrix psi(20, 5);
  for (std::size_t r = 0; r < 20; ++r)
    for (std::size_t c = 0; c < 5; ++c) psi(r, c) = rng.gaussian();
  std::vector<double> s(20);
  for (auto& v : s) v = rng.gaussian();
  const SparseCode full = lasso_target_k(psi, s, 5);
  CHECK(full.k() == 5);

  // Single-atom signal at k = 1 finds that atom.
  const Matrix ortho = testing::random_orthonormal(16, 8, 96);
  std::vector<double> pure(16);
  for (std::size_t r = 0; r < 16; ++r) pure[r] = -1.4 * ortho(r, 5);
  const SparseCode single = lasso_target_k(ortho, pure, 1);
  REQUIRE(single.support == std::vector<int>{5});
  CHECK(single.coefficients[0] == doctest::Approx(-1.4).epsilon(1e-9));  // debiased
}

TEST_CASE("debias: idempotent on omp output, exact on square supports, reduces lasso bias") {
  const Matrix psi = testing::random_orthonormal(15, 7, 97);
  TestRng rng(98);
  std::vector<double> s = column_combo(psi, {1, 4, 6}, {1.0, -2.0, 0.5});

  const SparseCode from_omp = omp(psi, s, 3);
  const SparseCode rebiased = debias(psi, s, from_omp);
  REQUIRE(rebiased.support == from_omp.support);
  for (std::size_t i = 0; i < rebiased.coefficients.size(); ++i)
    CHECK(rebiased.coefficients[i] ==
          doctest::Approx(from_omp.coefficients[i]).epsilon(1e-12));

  const SparseCode shrunk = lasso(psi, s, 0.8);
  if (shrunk.k() > 0) {
    const SparseCode fixed = debias(psi, s, shrunk);
    CHECK(fixed.residual_norm <= shrunk.residual_norm + 1e-12);
    CHECK(fixed.residual_norm < 1e-8);  // noiseless representable signal
  }

  SparseCode empty;
  CHECK_THROWS_AS(debias(psi, s, empty), Error);
}

TEST_CASE("debias never increases the residual (randomized)") {
  TestRng rng(99);
  for (int inst = 0; inst < 1000; ++inst) {
    Matrix psi(10, 6);
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t c = 0; c < 6; ++c) psi(r, c) = rng.gaussian();
    std::vector<double> s(10);
    for (auto& v : s) v = rng.gaussian();
    SparseCode code;
    const int k = 1 + static_cast<int>(rng.uniform() * 4.0);
    for (int j = 0; j < k; ++j) {
      code.support.push_back(j);
      code.coefficients.push_back(rng.gaussian());
    }
    code.residual_norm = residual_of(psi, s, code);
    const SparseCode fixed = debias(psi, s, code);
    CHECK(fixed.residual_norm <= code.residual_norm + 1e-12);
  }
}

TEST_CASE("square support gives an exact fit after debias") {
  TestRng rng(111);
  Matrix psi(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) psi(r, c) = rng.gaussian() + (r == c ? 2.5 : 0.0);
  std::vector<double> s(5);
  for (auto& v : s) v = rng.gaussian();
  SparseCode code;
  code.support = {0, 1, 2, 3, 4};
  code.coefficients.assign(5, 0.0);
  const SparseCode fixed = debias(psi, s, code);
  CHECK(fixed.residual_norm < 1e-10);
}

TEST_CASE("omp and lasso agree with projection coefficients on orthonormal designs") {
  const Matrix psi = testing::random_orthonormal(20, 6, 121);
  TestRng rng(122);
  std::vector<double> s(20);
  for (auto& v : s) v = rng.gaussian();

  const SparseCode via_omp = omp(psi, s, 6);
  const SparseCode via_lasso = lasso(psi, s, 0.0);
  const std::vector<double> a = via_omp.dense(6);
  const std::vector<double> b = via_lasso.dense(6);
  const Matrix psi_t = psi.transposed();
  for (std::size_t j = 0; j < 6; ++j) {
    const double proj = simd::dot(psi_t.row_span(j), s);
    CHECK(a[j] == doctest::Approx(proj).epsilon(1e-10));
    CHECK(b[j] == doctest::Approx(proj).epsilon(1e-10));
  }
}

TEST_CASE("reconstruct_isrf basics") {
  Dictionary dict;
  dict.atoms = testing::random_orthonormal(10, 4, 131);
  dict.n_atoms = 4;

  SparseCode zero;
  const Isrf z = reconstruct_isrf(dict, zero, 500.0);
  for (double v : z.values) CHECK(v == 0.0);
  CHECK(z.center == 500.0);

  SparseCode single;
  single.support = {2};
  single.coefficients = {1.0};
  const Isrf a = reconstruct_isrf(dict, single);
  for (std::size_t r = 0; r < 10; ++r) CHECK(a.values[r] == dict.atoms(r, 2));
}

TEST_CASE("effective dictionary shapes and content") {
  Dictionary dict;
  dict.atoms = testing::random_orthonormal(12, 5, 141);
  dict.n_atoms = 5;
  TestRng rng(142);
  Matrix op(7, 12);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 12; ++c) op(r, c) = rng.gaussian();

  const EffectiveDictionary eff = make_effective_dictionary(op, dict);
  REQUIRE(eff.matrix.rows() == 7);
  REQUIRE(eff.matrix.cols() == 5);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(eff.matrix(r, j) == doctest::Approx(simd::dot(op.row_span(r), dict.atom(j))));
}

}  // TEST_SUITE
