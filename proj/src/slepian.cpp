#include "dpssband/slepian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpssband/fft.hpp"
#include "dpssband/kernels.hpp"
#include "dpssband/linalg.hpp"

namespace dpssband {

namespace {

constexpr int kDenseCutoff = 512;
constexpr double kEigFloor = 1e-18;

double sinc(double t) {
  if (t == 0.0) return 1.0;
  double pt = M_PI * t;
  return std::sin(pt) / pt;
}

double clamp_open_unit(double lambda) {
  return std::clamp(lambda, kEigFloor, 1.0 - kEigFloor);
}

void normalize_signs(Eigen::MatrixXd& vectors) {
  for (int c = 0; c < vectors.cols(); ++c) {
    int peak = 0;
    double best = std::abs(vectors(0, c));
    for (int r = 1; r < vectors.rows(); ++r) {
      double mag = std::abs(vectors(r, c));
      if (mag > best) {  // strict: ties keep the lowest index
        best = mag;
        peak = r;
      }
    }
    if (vectors(peak, c) < 0.0) vectors.col(c) = -vectors.col(c);
  }
}

}  // namespace

void validate(const ProlateParams& p) {
  if (p.n < 1 || !(p.w > 0.0) || !(p.w < 0.5))
    throw std::invalid_argument(
        "parameter-out-of-range: require N >= 1 and 0 < W < 1/2");
}

Eigen::MatrixXd prolate_matrix(const ProlateParams& p) {
  validate(p);
  Eigen::MatrixXd b(p.n, p.n);
  for (int m = 0; m < p.n; ++m)
    for (int n = 0; n <= m; ++n) {
      double v = 2.0 * p.w * sinc(2.0 * p.w * (m - n));
      b(m, n) = v;
      b(n, m) = v;
    }
  return b;
}

DpssBasis build_dpss(const ProlateParams& p, int k) {
  validate(p);
  if (k < 1 || k > p.n)
    throw std::invalid_argument("parameter-out-of-range: require 1 <= k <= N");

  DpssBasis basis;
  basis.params = p;
  basis.k = k;

  if (p.n <= kDenseCutoff) {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    la::eig_symmetric(prolate_matrix(p), values, vectors);
    // ascending from LAPACK
    basis.vectors.resize(p.n, k);
    basis.eigenvalues.resize(k);
    for (int i = 0; i < k; ++i) {
      basis.vectors.col(i) = vectors.col(p.n - 1 - i);
      basis.eigenvalues[i] = clamp_open_unit(values[p.n - 1 - i]);
    }
  } else {
    // tridiagonal operator commuting with the prolate matrix
    Eigen::VectorXd diag(p.n), sub(p.n - 1);
    double c = std::cos(2.0 * M_PI * p.w);
    double half = (p.n - 1) / 2.0;
    for (int i = 0; i < p.n; ++i) diag[i] = (half - i) * (half - i) * c;
    for (int i = 0; i < p.n - 1; ++i)
      sub[i] = (i + 1) * (p.n - 1 - i) / 2.0;
    Eigen::VectorXd tvals;
    la::eig_tridiagonal_topk(diag, sub, k, tvals, basis.vectors);
    Eigen::VectorXd lambdas =
        kernels::rayleigh_eigenvalues(p.n, p.w, basis.vectors);
    basis.eigenvalues.resize(k);
    for (int i = 0; i < k; ++i)
      basis.eigenvalues[i] = clamp_open_unit(lambdas[i]);
  }
  normalize_signs(basis.vectors);
  return basis;
}

double eigenvalue_tail_sum(const ProlateParams& p,
                           const Eigen::VectorXd& eigenvalues_prefix) {
  validate(p);
  double tail = 2.0 * p.n * p.w - eigenvalues_prefix.sum();
  return std::max(tail, 0.0);
}

ConcentrationReport concentration_report(const ProlateParams& p,
                                         double threshold) {
  validate(p);
  if (!(threshold > 0.0) || !(threshold < 0.5))
    throw std::invalid_argument(
        "parameter-out-of-range: require 0 < threshold < 1/2");
  DpssBasis full = build_dpss(p, p.n);
  ConcentrationReport report;
  for (int i = 0; i < p.n; ++i) {
    double lambda = full.eigenvalues[i];
    if (lambda >= 1.0 - threshold) ++report.count_near_one;
    if (lambda <= threshold) ++report.count_near_zero;
  }
  report.transition_width = p.n - report.count_near_one - report.count_near_zero;
  return report;
}

}  // namespace dpssband
