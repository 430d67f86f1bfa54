#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "dpssband/rng.hpp"
#include "dpssband/sensing.hpp"

using namespace dpssband;

namespace {

Eigen::VectorXcd random_cvector(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.cgaussian();
  return v;
}

const OperatorKind kAllKinds[] = {
    OperatorKind::dense_gaussian, OperatorKind::dense_rademacher,
    OperatorKind::random_demodulator, OperatorKind::random_sampler};

}  // namespace

TEST_CASE("kind name round trip") {
  for (OperatorKind kind : kAllKinds)
    CHECK(operator_kind_from_string(to_string(kind)) == kind);
  CHECK(to_string(OperatorKind::dense_gaussian) == "gaussian");
  CHECK(to_string(OperatorKind::random_demodulator) == "demodulator");
  CHECK_THROWS(operator_kind_from_string("fourier"));
}

TEST_CASE("construction validates dimensions") {
  CHECK_THROWS(make_operator(OperatorKind::dense_gaussian, 0, 8, 1));
  CHECK_THROWS(make_operator(OperatorKind::dense_gaussian, 9, 8, 1));
  CHECK_THROWS(make_operator(OperatorKind::random_demodulator, 3, 8, 1));
  CHECK_NOTHROW(make_operator(OperatorKind::random_demodulator, 4, 8, 1));
}

TEST_CASE("operators are deterministic in the seed") {
  for (OperatorKind kind : kAllKinds) {
    MeasurementOperator a = make_operator(kind, 8, 32, 77);
    MeasurementOperator b = make_operator(kind, 8, 32, 77);
    MeasurementOperator c = make_operator(kind, 8, 32, 78);
    CHECK((op_dense(a) - op_dense(b)).norm() == 0.0);
    CHECK((op_dense(a) - op_dense(c)).norm() > 0.0);
  }
}

TEST_CASE("gaussian entries have variance 1/M") {
  MeasurementOperator op = make_operator(OperatorKind::dense_gaussian, 64, 256, 5);
  CHECK(std::abs(op.dense.mean()) < 0.01);
  CHECK(op.dense.squaredNorm() / op.dense.size() ==
        doctest::Approx(1.0 / 64).epsilon(0.05));
}

TEST_CASE("rademacher entries are exactly +-1/sqrt(M)") {
  MeasurementOperator op =
      make_operator(OperatorKind::dense_rademacher, 16, 64, 6);
  double mag = 1.0 / 4.0;
  for (int c = 0; c < 64; ++c)
    for (int r = 0; r < 16; ++r)
      CHECK(std::abs(std::abs(op.dense(r, c)) - mag) == 0.0);
}

TEST_CASE("apply and adjoint match the dense realization") {
  Eigen::VectorXcd x = random_cvector(32, 9);
  Eigen::VectorXcd y = random_cvector(8, 10);
  for (OperatorKind kind : kAllKinds) {
    MeasurementOperator op = make_operator(kind, 8, 32, 42);
    Eigen::MatrixXd a = op_dense(op);
    Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
    CHECK((op_apply(op, x) - ac * x).norm() < 1e-12);
    CHECK((op_adjoint(op, y) - ac.transpose() * y).norm() < 1e-12);
    CHECK_THROWS(op_apply(op, y));
    CHECK_THROWS(op_adjoint(op, x));
  }
}

TEST_CASE("demodulator structure") {
  MeasurementOperator op =
      make_operator(OperatorKind::random_demodulator, 4, 16, 3);
  REQUIRE(op.chips.size() == 16);
  for (double c : op.chips) CHECK(std::abs(c) == 1.0);
  Eigen::VectorXcd x = random_cvector(16, 11);
  Eigen::VectorXcd y = op_apply(op, x);
  for (int r = 0; r < 4; ++r) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < 4; ++i) acc += op.chips[4 * r + i] * x[4 * r + i];
    CHECK(std::abs(y[r] - acc) < 1e-14);
  }
}

TEST_CASE("sampler structure and full-rate isometry") {
  MeasurementOperator op = make_operator(OperatorKind::random_sampler, 8, 32, 4);
  std::set<int> seen(op.sample_indices.begin(), op.sample_indices.end());
  CHECK(seen.size() == 8);
  CHECK(op.scale == doctest::Approx(2.0).epsilon(1e-14));

  MeasurementOperator full =
      make_operator(OperatorKind::random_sampler, 32, 32, 4);
  Eigen::VectorXcd x = random_cvector(32, 12);
  CHECK(op_apply(full, x).norm() == doctest::Approx(x.norm()).epsilon(1e-14));
}

TEST_CASE("energy concentration probe") {
  Eigen::VectorXcd x = random_cvector(128, 13);
  double loose =
      concentration_probe(OperatorKind::dense_gaussian, 64, 128, x, 200, 0.5, 1);
  CHECK(loose < 0.05);
  double tight = concentration_probe(OperatorKind::dense_gaussian, 64, 128, x,
                                     200, 1e-4, 1);
  CHECK(tight > 0.5);
  CHECK_THROWS(concentration_probe(OperatorKind::dense_gaussian, 64, 128, x, 0,
                                   0.5, 1));
}
