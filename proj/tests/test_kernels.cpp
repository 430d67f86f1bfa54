#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dpssband/dictionary.hpp"
#include "dpssband/kernels.hpp"
#include "dpssband/rng.hpp"
#include "dpssband/slepian.hpp"

using namespace dpssband;

TEST_CASE("parallel Rayleigh eigenvalues match the serial reference") {
  int n = 300;
  double w = 1.0 / 16;
  DpssBasis basis = build_dpss({n, w}, 40);
  Eigen::VectorXd serial =
      kernels::rayleigh_eigenvalues_serial(n, w, basis.vectors);
  Eigen::VectorXd parallel = kernels::rayleigh_eigenvalues(n, w, basis.vectors);
  CHECK((serial - parallel).cwiseAbs().maxCoeff() == 0.0);
  // and both reproduce the eigenvalues of the dense path
  for (int i = 0; i < 40; ++i)
    CHECK(serial[i] == doctest::Approx(basis.eigenvalues[i]).epsilon(1e-9));
}

TEST_CASE("parallel cross-band coherence matches the serial reference") {
  MultibandDictionary dict = build_dictionary(256, 8, 6);
  CHECK(kernels::cross_band_coherence(dict) ==
        kernels::cross_band_coherence_serial(dict));
}

TEST_CASE("parallel probe failures match the serial reference") {
  Rng rng(15);
  Eigen::VectorXcd x(64);
  for (int i = 0; i < 64; ++i) x[i] = rng.cgaussian();
  for (double eta : {0.05, 0.2, 0.5}) {
    int serial = kernels::probe_failures_serial(OperatorKind::dense_gaussian,
                                                32, 64, x, 100, eta, 7);
    int parallel = kernels::probe_failures(OperatorKind::dense_gaussian, 32, 64,
                                           x, 100, eta, 7);
    CHECK(serial == parallel);
  }
}
