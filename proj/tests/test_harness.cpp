#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dpssband/harness.hpp"
#include "dpssband/rng.hpp"
#include "dpssband/signals.hpp"

using namespace dpssband;

TEST_CASE("snr in decibels") {
  Eigen::VectorXcd truth(2);
  truth << 1.0, 0.0;
  Eigen::VectorXcd est(2);
  est << 0.9, 0.0;
  CHECK(snr_db(truth, est) == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(snr_db(truth, truth) == kSnrCapDb);
  Eigen::VectorXcd tiny = truth;
  tiny[0] = 1.0 - 1e-300;
  CHECK(snr_db(truth, tiny) == kSnrCapDb);
  CHECK_THROWS(snr_db(Eigen::VectorXcd::Zero(2), est));
}

TEST_CASE("rule-of-thumb column count") {
  // n=1024, w=1/128, k_bands=5 gives 2NWK = 80
  int n = 1024;
  double w = 1.0 / 128;
  CHECK(rule_of_thumb_k(160, n, w, 5, 16, 38) == 16);  // rho = 2
  CHECK(rule_of_thumb_k(80, n, w, 5, 16, 38) == 16);   // rho = 1
  CHECK(rule_of_thumb_k(320, n, w, 5, 16, 38) == 27);  // rho = 4
  CHECK(rule_of_thumb_k(480, n, w, 5, 16, 38) == 38);  // rho = 6
  CHECK(rule_of_thumb_k(640, n, w, 5, 16, 38) == 38);  // rho = 8, flat
}

TEST_CASE("ceiling from the eigenvalue tail") {
  Eigen::VectorXd lams(4);
  lams << 1.0, 0.5, 1e-10, 1e-15;
  CHECK(k_ceiling_from_eigenvalues(lams) == 3);
  Eigen::VectorXd high = Eigen::VectorXd::Constant(5, 0.9);
  CHECK(k_ceiling_from_eigenvalues(high) == 5);
}

TEST_CASE("algorithm and axis names") {
  for (Algorithm a : {Algorithm::bbcosamp, Algorithm::cosamp, Algorithm::iht,
                      Algorithm::block_iht})
    CHECK(algorithm_from_string(to_string(a)) == a);
  CHECK(to_string(Algorithm::block_iht) == "block-iht");
  CHECK_THROWS(algorithm_from_string("omp"));
  CHECK(to_string(SweepAxis::msnr) == "msnr");
}

TEST_CASE("percentile and median") {
  std::vector<double> v{5, 1, 4, 2, 3};
  CHECK(median(v) == 3.0);
  CHECK(percentile5(v) == 1.0);
  std::vector<double> w{4, 1, 3, 2};
  CHECK(median(w) == 2.5);
  std::vector<double> big(100);
  for (int i = 0; i < 100; ++i) big[i] = i;
  CHECK(percentile5(big) == 5.0);
  CHECK_THROWS(median(std::vector<double>{}));
  CHECK_THROWS(percentile5(std::vector<double>{}));
}

TEST_CASE("sweeps are deterministic and validate input") {
  ExperimentConfig config;
  config.n = 128;
  config.j = 8;
  config.k_bands = 2;
  config.k = 16;
  config.m = 64;
  config.trials = 3;
  config.grid = {16.0};
  SweepResult r1 = run_sweep(config, SweepAxis::k);
  SweepResult r2 = run_sweep(config, SweepAxis::k);
  REQUIRE(r1.raw.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r1.raw[i].snr == r2.raw[i].snr);
    CHECK(r1.raw[i].seed == r2.raw[i].seed);
  }
  std::vector<double> snrs{r1.raw[0].snr, r1.raw[1].snr, r1.raw[2].snr};
  std::sort(snrs.begin(), snrs.end());
  CHECK(r1.snr_p5[0] == snrs[0]);
  CHECK(r1.snr_median[0] == snrs[1]);

  config.trials = 0;
  CHECK_THROWS(run_sweep(config, SweepAxis::k));
  config.trials = 1;
  config.grid.clear();
  CHECK_THROWS(run_sweep(config, SweepAxis::k));
}

TEST_CASE("block RIP estimate vanishes for an isometry") {
  MultibandDictionary dict = build_dictionary(64, 8, 4);
  MeasurementOperator full =
      make_operator(OperatorKind::random_sampler, 64, 64, 3);
  RipEstimate est = estimate_block_rip(full, dict, 2, 25, 9);
  CHECK(est.supports_tested == 25);
  CHECK(est.delta_lower < 1e-10);
  CHECK_THROWS(estimate_block_rip(full, dict, 2, 0, 9));
  CHECK_THROWS(estimate_block_rip(full, dict, 0, 5, 9));
}

TEST_CASE("oracle DFT baseline nails an on-grid sparse signal") {
  int n = 64, m = 32;
  Eigen::MatrixXcd psi = build_dft_dictionary(n);
  Eigen::VectorXcd x =
      psi.col(5) * 2.0 + psi.col(20) * std::complex<double>(0, 1) -
      psi.col(50) * 0.7;
  MeasurementOperator a = make_operator(OperatorKind::dense_gaussian, m, n, 4);
  Eigen::VectorXcd y = op_apply(a, x);
  RecoverySettings settings;
  settings.gamma = kInf;
  auto [best_s, best_snr] = oracle_dft_baseline(a, y, x, {3, 8}, settings);
  CHECK(best_snr > 100.0);
  CHECK(best_s == 3);
  CHECK_THROWS(oracle_dft_baseline(a, y, x, {}, settings));
}

TEST_CASE("Karhunen-Loeve verification suite passes at a reduced scale") {
  KlScaleParams params;
  params.n = 64;
  params.ks = {4, 8, 16};
  params.process_k = 8;
  params.draws = 2000;
  params.mb_j = 8;
  params.mb_k_cols = 8;
  std::vector<KlCheck> checks = kl_verification_suite(params);
  REQUIRE(checks.size() == 7);
  for (const KlCheck& c : checks) {
    INFO(c.name, " measured=", c.measured, " bound=", c.bound);
    CHECK(c.pass);
  }
}
