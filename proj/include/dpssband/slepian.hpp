#pragma once

#include <Eigen/Dense>

namespace dpssband {

/// Window length N and digital half-bandwidth W in (0, 1/2).
struct ProlateParams {
  int n = 0;
  double w = 0.0;
};

void validate(const ProlateParams& p);

/// B[m,n] = 2W sinc(2W (m-n)), sinc(t) = sin(pi t)/(pi t).
Eigen::MatrixXd prolate_matrix(const ProlateParams& p);

/// First k DPSS vectors (columns, index 0 most concentrated) and their
/// eigenvalues, descending in (0, 1).
struct DpssBasis {
  ProlateParams params;
  int k = 0;
  Eigen::MatrixXd vectors;      // n x k, orthonormal columns
  Eigen::VectorXd eigenvalues;  // length k
};

/// Eigensolve path: symmetric tridiagonal operator commuting with the prolate
/// matrix for n > 512, dense symmetric eigensolve otherwise. Eigenvalues on
/// the tridiagonal path are Rayleigh quotients against the sinc kernel.
/// Sign convention: largest-magnitude entry positive, ties to lowest index.
DpssBasis build_dpss(const ProlateParams& p, int k);

/// Sum of the trailing eigenvalues, computed as 2NW minus the given prefix
/// sum and clamped at zero.
double eigenvalue_tail_sum(const ProlateParams& p,
                           const Eigen::VectorXd& eigenvalues_prefix);

struct ConcentrationReport {
  int count_near_one = 0;
  int count_near_zero = 0;
  int transition_width = 0;
};

/// Counts eigenvalues >= 1-threshold and <= threshold over the full spectrum.
ConcentrationReport concentration_report(const ProlateParams& p,
                                         double threshold);

}  // namespace dpssband
