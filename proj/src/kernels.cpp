#include "dpssband/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <vector>

#include "dpssband/fft.hpp"

namespace dpssband::kernels {

Eigen::VectorXd rayleigh_eigenvalues_serial(int n, double w,
                                            const Eigen::MatrixXd& vectors) {
  ProlateApplier applier(n, w);
  Eigen::VectorXd out(vectors.cols());
  for (int c = 0; c < vectors.cols(); ++c)
    out[c] = applier.rayleigh(vectors.col(c));
  return out;
}

Eigen::VectorXd rayleigh_eigenvalues(int n, double w,
                                     const Eigen::MatrixXd& vectors) {
  int cols = static_cast<int>(vectors.cols());
  Eigen::VectorXd out(cols);
#pragma omp parallel
  {
    ProlateApplier applier(n, w);  // per-thread FFT buffers
#pragma omp for schedule(static)
    for (int c = 0; c < cols; ++c) out[c] = applier.rayleigh(vectors.col(c));
  }
  return out;
}

namespace {

// Cross-band inner products depend only on the center difference d = j - i:
// G_d = S_k^T diag(e^{j 2 pi d m / J}) S_k.
double coherence_for_difference(const MultibandDictionary& dict, int d) {
  int n = dict.n;
  Eigen::VectorXcd twiddle(n);
  double step = 2.0 * M_PI * d / dict.j;
  for (int m = 0; m < n; ++m)
    twiddle[m] = std::complex<double>(std::cos(step * m), std::sin(step * m));
  Eigen::MatrixXcd modulated =
      twiddle.asDiagonal() * dict.basis.cast<std::complex<double>>();
  Eigen::MatrixXcd gram =
      dict.basis.transpose().cast<std::complex<double>>() * modulated;
  return gram.cwiseAbs().maxCoeff();
}

}  // namespace

double cross_band_coherence_serial(const MultibandDictionary& dict) {
  double best = 0.0;
  for (int d = 1; d < dict.j; ++d)
    best = std::max(best, coherence_for_difference(dict, d));
  return best;
}

double cross_band_coherence(const MultibandDictionary& dict) {
  int count = dict.j - 1;
  std::vector<double> per_d(std::max(count, 0), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int d = 1; d < dict.j; ++d)
    per_d[d - 1] = coherence_for_difference(dict, d);
  double best = 0.0;  // fixed reduction order
  for (double v : per_d) best = std::max(best, v);
  return best;
}

namespace {

bool probe_trial(OperatorKind kind, int m, int n, const Eigen::VectorXcd& x,
                 double eta, std::uint64_t seed) {
  MeasurementOperator op = make_operator(kind, m, n, seed);
  double energy = x.squaredNorm();
  double measured = op_apply(op, x).squaredNorm();
  return std::abs(measured - energy) >= eta * energy;
}

}  // namespace

int probe_failures_serial(OperatorKind kind, int m, int n,
                          const Eigen::VectorXcd& x, int trials, double eta,
                          std::uint64_t seed) {
  int failures = 0;
  for (int t = 0; t < trials; ++t)
    if (probe_trial(kind, m, n, x, eta, seed + t)) ++failures;
  return failures;
}

int probe_failures(OperatorKind kind, int m, int n, const Eigen::VectorXcd& x,
                   int trials, double eta, std::uint64_t seed) {
  int failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (int t = 0; t < trials; ++t)
    if (probe_trial(kind, m, n, x, eta, seed + t)) ++failures;
  return failures;
}

}  // namespace dpssband::kernels
