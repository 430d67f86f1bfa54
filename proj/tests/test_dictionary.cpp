#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/SVD>
#include <cmath>
#include <complex>

#include "dpssband/dictionary.hpp"
#include "dpssband/rng.hpp"

using namespace dpssband;

namespace {

Eigen::VectorXcd random_cvector(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.cgaussian();
  return v;
}

double brute_force_coherence(const MultibandDictionary& dict) {
  double best = 0.0;
  for (int b1 = 0; b1 < dict.j; ++b1)
    for (int b2 = b1 + 1; b2 < dict.j; ++b2)
      for (int c1 = 0; c1 < dict.k; ++c1)
        for (int c2 = 0; c2 < dict.k; ++c2)
          best = std::max(
              best, std::abs(dict.column(b1, c1).dot(dict.column(b2, c2))));
  return best;
}

}  // namespace

TEST_CASE("band grid centers") {
  BandGrid grid = make_band_grid(4);
  const double expected[] = {-0.375, -0.125, 0.125, 0.375};
  for (int i = 0; i < 4; ++i)
    CHECK(grid.centers[i] == doctest::Approx(expected[i]).epsilon(1e-15));
  CHECK_THROWS(make_band_grid(0));
}

TEST_CASE("make_support sorts and deduplicates") {
  BlockSupport s = make_support({5, 1, 3, 1, 5});
  REQUIRE(s.size() == 3);
  CHECK(s.indices == std::vector<int>{1, 3, 5});
  CHECK(make_support({}).empty());
}

TEST_CASE("modulation phase entries") {
  Eigen::VectorXcd p = modulation_phase(0.125, 8);
  for (int m = 0; m < 8; ++m) {
    CHECK(std::abs(p[m]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::arg(p[m]) ==
          doctest::Approx(std::remainder(2 * M_PI * 0.125 * m, 2 * M_PI))
              .epsilon(1e-12));
  }
}

TEST_CASE("dictionary construction validates parameters") {
  CHECK_THROWS(build_dictionary(0, 4, 2));
  CHECK_THROWS(build_dictionary(16, 0, 2));
  CHECK_THROWS(build_dictionary(16, 4, 0));
  CHECK_THROWS(build_dictionary(16, 4, 17));
}

TEST_CASE("single-band dictionary degenerates to the identity basis") {
  MultibandDictionary dict = build_dictionary(16, 1, 8);
  CHECK(dict.w == doctest::Approx(0.5));
  CHECK((dict.basis - Eigen::MatrixXd::Identity(16, 8)).norm() == 0.0);
  for (int i = 0; i < 8; ++i) CHECK(dict.eigenvalues[i] > 1.0 - 1e-15);
  CHECK(max_cross_band_coherence(dict) == 0.0);
}

TEST_CASE("blocks have orthonormal columns") {
  MultibandDictionary dict = build_dictionary(64, 4, 6);
  for (int b = 0; b < 4; ++b) {
    Eigen::MatrixXcd blk = dict.block(b);
    CHECK((blk.adjoint() * blk - Eigen::MatrixXcd::Identity(6, 6))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("apply and adjoint match the dense dictionary") {
  MultibandDictionary dict = build_dictionary(64, 4, 6);
  Eigen::MatrixXcd psi = dict.dense();
  Eigen::VectorXcd alpha = random_cvector(dict.dim(), 21);
  Eigen::VectorXcd x = random_cvector(64, 22);
  CHECK((dict_apply(dict, alpha) - psi * alpha).norm() < 1e-10);
  CHECK((dict_adjoint(dict, x) - psi.adjoint() * x).norm() < 1e-10);
  CHECK_THROWS(dict_apply(dict, x));
  CHECK_THROWS(dict_adjoint(dict, alpha));
}

TEST_CASE("cross-band coherence matches brute force") {
  MultibandDictionary dict = build_dictionary(64, 4, 6);
  CHECK(max_cross_band_coherence(dict) ==
        doctest::Approx(brute_force_coherence(dict)).epsilon(1e-12));
}

TEST_CASE("coherence decays as N grows") {
  // k = 0.75 * 2NW so the coherence sits above the numerical floor
  double c64 = max_cross_band_coherence(build_dictionary(64, 4, 12));
  double c128 = max_cross_band_coherence(build_dictionary(128, 4, 24));
  double c256 = max_cross_band_coherence(build_dictionary(256, 4, 48));
  CHECK(c128 < c64 / 10.0);
  CHECK(c256 < c128 / 10.0);
}

TEST_CASE("gram singular extremes match the dense SVD") {
  MultibandDictionary dict = build_dictionary(64, 4, 6);
  auto [lo, hi] = gram_singular_extremes(dict);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dict.dense());
  CHECK(hi == doctest::Approx(svd.singularValues()[0]).epsilon(1e-8));
  CHECK(lo ==
        doctest::Approx(svd.singularValues()[dict.dim() - 1]).epsilon(1e-8));
}

TEST_CASE("reduced basis spans the selected blocks") {
  MultibandDictionary dict = build_dictionary(64, 8, 4);
  BlockSupport support = make_support({1, 5});
  Eigen::MatrixXcd u = reduced_basis(dict, support, 1e-10);
  CHECK((u.adjoint() * u -
         Eigen::MatrixXcd::Identity(u.cols(), u.cols()))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  for (int b : support.indices)
    for (int c = 0; c < dict.k; ++c) {
      Eigen::VectorXcd col = dict.column(b, c);
      CHECK((col - u * (u.adjoint() * col)).norm() < 1e-8);
    }
  CHECK_THROWS(reduced_basis(dict, BlockSupport{}, 1e-10));
  CHECK_THROWS(reduced_basis(dict, support, 0.0));
}

TEST_CASE("DFT dictionary is unitary with the stated frequencies") {
  int n = 8;
  Eigen::MatrixXcd psi = build_dft_dictionary(n);
  CHECK((psi.adjoint() * psi - Eigen::MatrixXcd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  for (int c = 0; c < n; ++c) {
    double f = static_cast<double>(c - n / 2 + 1) / n;
    for (int m = 0; m < n; ++m) {
      std::complex<double> expected =
          std::exp(std::complex<double>(0, 2 * M_PI * f * m)) / std::sqrt(8.0);
      CHECK(std::abs(psi(m, c) - expected) < 1e-12);
    }
  }
  Eigen::MatrixXcd one = build_dft_dictionary(1);
  CHECK(std::abs(one(0, 0) - 1.0) < 1e-14);
}
