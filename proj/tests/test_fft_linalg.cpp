#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>

#include "dpssband/fft.hpp"
#include "dpssband/linalg.hpp"
#include "dpssband/rng.hpp"
#include "dpssband/slepian.hpp"

using namespace dpssband;

namespace {

Eigen::VectorXcd random_cvector(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.cgaussian();
  return v;
}

Eigen::MatrixXcd random_cmatrix(int m, int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd a(m, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r) a(r, c) = rng.cgaussian();
  return a;
}

}  // namespace

TEST_CASE("forward DFT matches the direct sum") {
  int n = 8;
  Eigen::VectorXcd x = random_cvector(n, 1);
  Dft dft(n);
  Eigen::VectorXcd out(n);
  dft.forward(x.data(), out.data());
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (int t = 0; t < n; ++t)
      acc += x[t] * std::exp(std::complex<double>(0, -2.0 * M_PI * k * t / n));
    CHECK(std::abs(out[k] - acc) < 1e-12);
  }
}

TEST_CASE("inverse(forward(x)) = N x") {
  int n = 64;
  Eigen::VectorXcd x = random_cvector(n, 2);
  Dft dft(n);
  Eigen::VectorXcd mid(n), back(n);
  dft.forward(x.data(), mid.data());
  dft.inverse(mid.data(), back.data());
  CHECK((back - double(n) * x).norm() < 1e-10 * x.norm() * n);
}

TEST_CASE("prolate applier matches the dense matrix") {
  int n = 50;
  double w = 0.1;
  ProlateApplier applier(n, w);
  Eigen::MatrixXd b = prolate_matrix({n, w});
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.gaussian();
    CHECK((applier.apply(x) - b * x).norm() < 1e-10 * x.norm());
    Eigen::VectorXd u = x / x.norm();
    CHECK(applier.rayleigh(u) ==
          doctest::Approx(u.dot(b * u)).epsilon(1e-10));
  }
}

TEST_CASE("economy SVD matches Eigen and reconstructs") {
  Eigen::MatrixXcd a = random_cmatrix(12, 8, 4);
  Eigen::MatrixXcd u, v;
  Eigen::VectorXd s;
  la::svd_econ(a, u, s, v);
  REQUIRE(u.cols() == 8);
  REQUIRE(s.size() == 8);

  Eigen::JacobiSVD<Eigen::MatrixXcd> ref(a);
  for (int i = 0; i < 8; ++i)
    CHECK(s[i] == doctest::Approx(ref.singularValues()[i]).epsilon(1e-10));
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-10);
  CHECK((u * s.asDiagonal() * v.adjoint() - a).norm() < 1e-10);
}

TEST_CASE("hermitian eigenvalues match Eigen") {
  Eigen::MatrixXcd g = random_cmatrix(10, 10, 5);
  Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
  Eigen::VectorXd w = la::eigvals_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(h);
  for (int i = 0; i < 10; ++i)
    CHECK(w[i] == doctest::Approx(ref.eigenvalues()[i]).epsilon(1e-10));
}

TEST_CASE("symmetric eigensolve reconstructs the matrix") {
  Rng rng(6);
  Eigen::MatrixXd g(9, 9);
  for (int c = 0; c < 9; ++c)
    for (int r = 0; r < 9; ++r) g(r, c) = rng.gaussian();
  Eigen::MatrixXd h = (g + g.transpose()) / 2.0;
  Eigen::VectorXd w;
  Eigen::MatrixXd q;
  la::eig_symmetric(h, w, q);
  CHECK((q * w.asDiagonal() * q.transpose() - h).norm() < 1e-10);
}

TEST_CASE("tridiagonal top-k eigensolve") {
  int n = 10, k = 3;
  Rng rng(7);
  Eigen::VectorXd d(n), e(n - 1);
  for (int i = 0; i < n; ++i) d[i] = rng.gaussian();
  for (int i = 0; i < n - 1; ++i) e[i] = rng.gaussian();
  Eigen::VectorXd vals;
  Eigen::MatrixXd vecs;
  la::eig_tridiagonal_topk(d, e, k, vals, vecs);

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) t(i, i) = d[i];
  for (int i = 0; i < n - 1; ++i) t(i, i + 1) = t(i + 1, i) = e[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(t);
  for (int i = 0; i < k; ++i) {
    CHECK(vals[i] ==
          doctest::Approx(ref.eigenvalues()[n - 1 - i]).epsilon(1e-10));
    if (i > 0) CHECK(vals[i] <= vals[i - 1]);
    CHECK((t * vecs.col(i) - vals[i] * vecs.col(i)).norm() < 1e-10);
  }
}

TEST_CASE("norm-constrained LS: inactive constraint gives the pseudoinverse") {
  Eigen::MatrixXcd b = random_cmatrix(20, 8, 8);
  Eigen::VectorXcd y = random_cvector(20, 9);
  Eigen::VectorXcd ls =
      b.completeOrthogonalDecomposition().solve(y);
  Eigen::VectorXcd z = la::ls_norm_constrained(b, y, 10.0 * ls.norm(), 1e-12);
  CHECK((z - ls).norm() < 1e-8 * ls.norm());
  CHECK_THROWS(la::ls_norm_constrained(b, y, 0.0, 1e-12));
}

TEST_CASE("norm-constrained LS: active constraint satisfies the KKT system") {
  Eigen::MatrixXcd b = random_cmatrix(20, 8, 10);
  Eigen::VectorXcd y = random_cvector(20, 11);
  Eigen::VectorXcd ls = b.completeOrthogonalDecomposition().solve(y);
  double gamma = 0.5 * ls.norm();
  Eigen::VectorXcd z = la::ls_norm_constrained(b, y, gamma, 1e-12);
  CHECK(z.norm() == doctest::Approx(gamma).epsilon(1e-6));
  // gradient of the residual must be antiparallel to z with nu >= 0
  Eigen::VectorXcd g = b.adjoint() * (b * z - y);
  double nu = -std::real(g.dot(z)) / z.squaredNorm();
  CHECK(nu >= -1e-10);
  CHECK((g + nu * z).norm() < 1e-6 * g.norm());
}
