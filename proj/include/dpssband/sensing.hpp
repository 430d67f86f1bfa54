#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace dpssband {

enum class OperatorKind {
  dense_gaussian,
  dense_rademacher,
  random_demodulator,
  random_sampler,
};

std::string to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& name);

/// M x N linear measurement map with real realized data, applied to complex
/// vectors componentwise. Demodulator and sampler apply in O(N).
struct MeasurementOperator {
  OperatorKind kind = OperatorKind::dense_gaussian;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;

  Eigen::MatrixXd dense;            // dense kinds only
  std::vector<double> chips;        // demodulator: length n, entries +-1
  std::vector<int> sample_indices;  // sampler: m distinct indices
  double scale = 1.0;               // sampler: sqrt(n/m)
};

/// Deterministic given (kind, m, n, seed). Demodulator requires m | n.
MeasurementOperator make_operator(OperatorKind kind, int m, int n,
                                  std::uint64_t seed);

Eigen::VectorXcd op_apply(const MeasurementOperator& op,
                          const Eigen::VectorXcd& x);
Eigen::VectorXcd op_adjoint(const MeasurementOperator& op,
                            const Eigen::VectorXcd& y);

/// Dense M x N realization (test/diagnostic use).
Eigen::MatrixXd op_dense(const MeasurementOperator& op);

/// Fraction of freshly drawn operators with | ||Ax||^2 - ||x||^2 | >=
/// eta ||x||^2 over `trials` draws (seeds seed+0 .. seed+trials-1).
double concentration_probe(OperatorKind kind, int m, int n,
                           const Eigen::VectorXcd& x, int trials, double eta,
                           std::uint64_t seed);

}  // namespace dpssband
