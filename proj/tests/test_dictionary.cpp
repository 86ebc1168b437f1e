#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "spirit/dictionary/dictionary.hpp"
#include "spirit/simd/kernels.hpp"
#include "synthetic.hpp"

using namespace spirit;
using testing::TestRng;

namespace {

std::vector<Isrf> random_isrfs(int count, int n_samples, std::uint64_t seed) {
  TestRng rng(seed);
  std::vector<Isrf> out;
  for (int m = 0; m < count; ++m) {
    Isrf isrf;
    isrf.values.resize(static_cast<std::size_t>(n_samples));
    // smooth-ish positive bumps
    const double mu = rng.uniform(0.3, 0.7) * n_samples;
    const double s = rng.uniform(0.05, 0.2) * n_samples;
    for (int i = 0; i < n_samples; ++i) {
      const double d = (i - mu) / s;
      isrf.values[static_cast<std::size_t>(i)] = std::exp(-0.5 * d * d) + 0.01;
    }
    out.push_back(normalize(std::move(isrf)));
  }
  return out;
}

double unit_dot(std::span<const double> a, std::span<const double> b) {
  return simd::dot(a, b) / std::sqrt(simd::sq_norm(a) * simd::sq_norm(b));
}

// ||P_a - P_b||_F for the projectors onto the column spans.
double projector_distance(const Matrix& a, const Matrix& b) {
  auto to_eigen = [](const Matrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    return e;
  };
  const Eigen::MatrixXd ea = to_eigen(a), eb = to_eigen(b);
  const Eigen::MatrixXd pa = ea * (ea.transpose() * ea).inverse() * ea.transpose();
  const Eigen::MatrixXd pb = eb * (eb.transpose() * eb).inverse() * eb.transpose();
  return (pa - pb).norm();
}

// Orthonormal planted atoms, sign-flipped to positive sums so 2-sparse
// positive combinations are valid responses.
Matrix planted_positive_atoms(std::size_t n_samples, int n_atoms, std::uint64_t seed) {
  Matrix planted = testing::random_orthonormal(n_samples, static_cast<std::size_t>(n_atoms), seed);
  for (int j = 0; j < n_atoms; ++j) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n_samples; ++r) sum += planted(r, static_cast<std::size_t>(j));
    if (sum < 0.0)
      for (std::size_t r = 0; r < n_samples; ++r)
        planted(r, static_cast<std::size_t>(j)) = -planted(r, static_cast<std::size_t>(j));
  }
  return planted;
}

std::vector<Isrf> planted_sparse_training(const Matrix& planted, int count, int k_sparse,
                                          std::uint64_t seed) {
  TestRng rng(seed);
  std::vector<Isrf> out;
  const int n_atoms = static_cast<int>(planted.cols());
  for (int m = 0; m < count; ++m) {
    Isrf isrf;
    isrf.values.assign(planted.rows(), 0.0);
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < k_sparse) {
      const int j = static_cast<int>(rng.uniform() * n_atoms) % n_atoms;
      bool dup = false;
      for (int p : picked) dup = dup || p == j;
      if (!dup) picked.push_back(j);
    }
    for (int j : picked) {
      const double c = rng.uniform(0.5, 1.5);
      for (std::size_t r = 0; r < planted.rows(); ++r)
        isrf.values[r] += c * planted(r, static_cast<std::size_t>(j));
    }
    out.push_back(std::move(isrf));
  }
  return out;
}

}  // namespace

TEST_SUITE("dictionary") {

TEST_CASE("rank-1 training: single atom equals the unit-normalized ISRF") {
  testing::Instrument inst = testing::make_instrument(4, 12, 0.1, 42);
  const std::vector<Isrf> training(5, inst.truth[0]);
  const Dictionary dict = build_svd(training, 1);
  REQUIRE(dict.n_atoms == 1);

  std::vector<double> expected = inst.truth[0].values;
  const double nrm = std::sqrt(simd::sq_norm(expected));
  for (auto& v : expected) v /= nrm;
  for (std::size_t r = 0; r < dict.atoms.rows(); ++r)
    CHECK(dict.atoms(r, 0) == doctest::Approx(expected[r]).epsilon(1e-10));
}

TEST_CASE("two orthonormal training vectors: atoms span the same plane") {
  const Matrix ortho = testing::random_orthonormal(16, 2, 7);
  std::vector<Isrf> training;
  for (int c = 0; c < 2; ++c) {
    Isrf isrf;
    isrf.values.resize(16);
    for (std::size_t r = 0; r < 16; ++r)
      isrf.values[r] = std::fabs(ortho(r, static_cast<std::size_t>(c))) + 0.05;
    training.push_back(std::move(isrf));
  }
  // use the actual (positive) vectors, orthonormality not required for span match
  const Dictionary dict = build_svd(training, 2);
  Matrix x(16, 2);
  for (int c = 0; c < 2; ++c) {
    const Isrf n = normalize(training[static_cast<std::size_t>(c)]);
    for (std::size_t r = 0; r < 16; ++r) x(r, static_cast<std::size_t>(c)) = n.values[r];
  }
  CHECK(projector_distance(dict.atoms, x) < 1e-10);
}

TEST_CASE("Eckart-Young: projection error matches discarded singular values") {
  const std::vector<Isrf> training = random_isrfs(20, 24, 11);
  const int n_d = 5;
  const Dictionary dict = build_svd(training, n_d);

  // Full-SVD oracle on the same normalized training matrix.
  Eigen::MatrixXd x(24, 20);
  for (int m = 0; m < 20; ++m) {
    const Isrf n = normalize(training[static_cast<std::size_t>(m)]);
    for (int r = 0; r < 24; ++r) x(r, m) = n.values[static_cast<std::size_t>(r)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x);
  double discarded = 0.0;
  for (int i = n_d; i < svd.singularValues().size(); ++i)
    discarded += svd.singularValues()(i) * svd.singularValues()(i);

  const double err = projection_error(dict, training);
  CHECK(err * err == doctest::Approx(discarded).epsilon(1e-9));
}

TEST_CASE("svd dictionary invariants: unit norms, orthogonality, sign rule, determinism") {
  const std::vector<Isrf> training = random_isrfs(30, 40, 13);
  const Dictionary dict = build_svd(training, 8);
  for (int j = 0; j < 8; ++j) {
    const auto atom = dict.atom(j);
    CHECK(std::sqrt(simd::sq_norm(atom)) == doctest::Approx(1.0).epsilon(1e-12));
    double peak = 0.0;
    for (double v : atom) peak = std::max(peak, std::fabs(v));
    bool peak_positive = false;
    for (double v : atom)
      if (std::fabs(v) == peak) {
        peak_positive = v > 0.0;
        break;
      }
    CHECK(peak_positive);
    for (int j2 = j + 1; j2 < 8; ++j2)
      CHECK(std::fabs(simd::dot(atom, dict.atom(j2))) < 1e-10);
  }
  const Dictionary again = build_svd(training, 8);
  CHECK(again.atoms == dict.atoms);

  // singular values are recorded in decreasing order
  for (std::size_t i = 1; i < dict.singular_values.size(); ++i)
    CHECK(dict.singular_values[i] <= dict.singular_values[i - 1] + 1e-15);
}

TEST_CASE("svd subspaces are nested: more atoms never hurt training reconstruction") {
  const std::vector<Isrf> training = random_isrfs(25, 32, 17);
  double prev = 1e300;
  for (int n_d : {2, 4, 6, 10, 15}) {
    const double err = projection_error(build_svd(training, n_d), training);
    CHECK(err <= prev + 1e-12);
    prev = err;
  }
}

TEST_CASE("rank errors") {
  const std::vector<Isrf> training = random_isrfs(5, 12, 19);
  CHECK_THROWS_AS(build_svd(training, 6), Error);
  CHECK_THROWS_AS(build_svd(training, 0), Error);
  CHECK_THROWS_AS(build_ksvd(training, 3, 2, {.iters = 0}), Error);
  CHECK_THROWS_AS(build_ksvd(training, 3, 0), Error);
  CHECK_THROWS_AS(build_ksvd(training, 3, 4), Error);  // k_sparse > n_atoms
}

TEST_CASE("ksvd on planted sparse data drives the error to zero") {
  const Matrix planted = planted_positive_atoms(20, 5, 3001);
  const std::vector<Isrf> training = planted_sparse_training(planted, 300, 2, 3002);

  KsvdOptions opts;
  opts.iters = 120;
  opts.rel_improvement_stop = 0.0;
  const Dictionary dict = build_ksvd(training, 5, 2, opts);
  REQUIRE(!dict.ksvd_objective.empty());
  CHECK(dict.ksvd_objective.back() < 1e-8);

  // objective recorded per coding pass, non-increasing throughout
  for (std::size_t i = 1; i < dict.ksvd_objective.size(); ++i)
    CHECK(dict.ksvd_objective[i] <= dict.ksvd_objective[i - 1] * (1.0 + 1e-12));

  // every planted atom is recovered up to sign
  for (int p = 0; p < 5; ++p) {
    std::vector<double> atom(20);
    for (std::size_t r = 0; r < 20; ++r) atom[r] = planted(r, static_cast<std::size_t>(p));
    double best = 0.0;
    for (int j = 0; j < 5; ++j) best = std::max(best, std::fabs(unit_dot(atom, dict.atom(j))));
    CHECK(best > 1.0 - 1e-6);
  }
}

TEST_CASE("ksvd single iteration with full support keeps the svd subspace") {
  const Matrix ortho = testing::random_orthonormal(18, 4, 55);
  std::vector<Isrf> training;
  for (int c = 0; c < 4; ++c) {
    Isrf isrf;
    isrf.values.resize(18);
    for (std::size_t r = 0; r < 18; ++r)
      isrf.values[r] = std::fabs(ortho(r, static_cast<std::size_t>(c))) + 0.02;
    training.push_back(std::move(isrf));
  }
  const Dictionary svd = build_svd(training, 4);
  const Dictionary ksvd = build_ksvd(training, 4, 4, {.iters = 1});
  CHECK(projector_distance(svd.atoms, ksvd.atoms) < 1e-10);
}

TEST_CASE("ksvd objective is monotone on generic training") {
  const std::vector<Isrf> training = random_isrfs(40, 24, 301);
  KsvdOptions opts;
  opts.iters = 10;
  opts.rel_improvement_stop = 0.0;
  const Dictionary dict = build_ksvd(training, 6, 3, opts);
  REQUIRE(dict.ksvd_objective.size() >= 2);
  for (std::size_t i = 1; i < dict.ksvd_objective.size(); ++i)
    CHECK(dict.ksvd_objective[i] <= dict.ksvd_objective[i - 1] * (1.0 + 1e-12));
}

TEST_CASE("build_mixed composition and degenerate forms") {
  testing::Instrument inst = testing::make_instrument(60, 10, 0.1, 401);
  std::vector<Isrf> uniform;
  for (int rep = 0; rep < 18; ++rep)
    for (const auto& t : inst.truth) uniform.push_back(t);
  uniform.resize(1030);
  std::vector<Isrf> scene = {inst.truth[0], inst.truth[1], inst.truth[2]};

  const Dictionary mixed = build_mixed(uniform, scene, 10, 6, DictionaryMethod::Svd);
  CHECK(mixed.uniform_count == 103);
  CHECK(mixed.scene_count == 3);
  CHECK(mixed.training_count == 106);

  const Dictionary plain = build_mixed(inst.truth, {}, 1, 6, DictionaryMethod::Svd);
  const Dictionary direct = build_svd(inst.truth, 6);
  CHECK(plain.atoms == direct.atoms);

  const Dictionary scene_only = build_mixed({}, scene, 1, 2, DictionaryMethod::Svd);
  const Dictionary scene_direct = build_svd(scene, 2);
  CHECK(scene_only.atoms == scene_direct.atoms);
}

}  // TEST_SUITE
