#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "dpssband/dictionary.hpp"
#include "dpssband/sensing.hpp"

namespace dpssband {

struct RecoverySettings {
  int max_iterations = 100;
  double residual_tol = 1e-6;  // relative to ||y||
  double mu = 1.0;
  /// Norm budget for the Tikhonov-constrained update. 0 = estimate from
  /// ||y|| and a power-iteration bound on sigma_min(A); +inf = unconstrained.
  double gamma = 0.0;
  double svd_tol = 1e-10;
  bool halt_on_residual_increase = true;
};

enum class SolveMode { signal, coefficient };

struct RecoveryReport {
  Eigen::VectorXcd estimate_x;
  Eigen::VectorXcd estimate_coeffs;  // coefficient-mode solvers only
  std::vector<int> support;          // block indices (or flat for cosamp)
  int iterations = 0;
  std::vector<double> residual_history;  // relative residuals per iteration
  bool converged = false;
};

/// Keeps the S largest-magnitude entries; ties broken by lowest index.
Eigen::VectorXcd hard_threshold(const Eigen::VectorXcd& v, int s);

/// IHT over a dictionary (or identity when dict == nullptr).
/// coefficient mode: alpha <- H(alpha + mu (A Psi)^H (y - A Psi alpha), S)
/// signal mode:      x <- Psi H(Psi^H (x + mu A^H (y - A x)), S)
RecoveryReport iht(const MeasurementOperator& a,
                   const MultibandDictionary* dict, const Eigen::VectorXcd& y,
                   int s, SolveMode mode, const RecoverySettings& settings);

/// Greedy block-OMP approximation of the projection onto K-block-sparse
/// signals: K rounds of proxy / max-block-energy selection / residual
/// orthogonalization against the selected blocks.
std::pair<BlockSupport, Eigen::VectorXcd> block_project(
    const Eigen::VectorXcd& x, const MultibandDictionary& dict, int k_blocks,
    const RecoverySettings& settings);

/// min ||y - A z|| over z in range(Psi_I) with ||z|| <= gamma.
Eigen::VectorXcd constrained_ls(const MeasurementOperator& a,
                                const MultibandDictionary& dict,
                                const BlockSupport& support,
                                const Eigen::VectorXcd& y, double gamma,
                                double svd_tol);

/// Block-based CoSaMP; signal mode identifies/prunes through block_project,
/// coefficient mode through exact block thresholding of the coefficients.
RecoveryReport bbcosamp(const MeasurementOperator& a,
                        const MultibandDictionary& dict,
                        const Eigen::VectorXcd& y, int k_blocks,
                        SolveMode mode, const RecoverySettings& settings);

/// Standard CoSaMP over an orthonormal dictionary (psi == nullptr means
/// identity). Requires M >= 3S.
RecoveryReport cosamp(const MeasurementOperator& a,
                      const Eigen::MatrixXcd* psi, const Eigen::VectorXcd& y,
                      int s, const RecoverySettings& settings);

/// x <- P(x + mu A^H (y - A x), K) with block_project as the projection.
RecoveryReport block_iht(const MeasurementOperator& a,
                         const MultibandDictionary& dict,
                         const Eigen::VectorXcd& y, int k_blocks,
                         const RecoverySettings& settings);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace dpssband
