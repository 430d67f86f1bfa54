#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "dpssband/dictionary.hpp"
#include "dpssband/sensing.hpp"

namespace dpssband::kernels {

// Data-parallel inner loops. Each kernel has a serial reference used by the
// tests and a parallel version that must reproduce it exactly (per-item work
// is independent; reductions run in a fixed order).

Eigen::VectorXd rayleigh_eigenvalues_serial(int n, double w,
                                            const Eigen::MatrixXd& vectors);
Eigen::VectorXd rayleigh_eigenvalues(int n, double w,
                                     const Eigen::MatrixXd& vectors);

double cross_band_coherence_serial(const MultibandDictionary& dict);
double cross_band_coherence(const MultibandDictionary& dict);

int probe_failures_serial(OperatorKind kind, int m, int n,
                          const Eigen::VectorXcd& x, int trials, double eta,
                          std::uint64_t seed);
int probe_failures(OperatorKind kind, int m, int n, const Eigen::VectorXcd& x,
                   int trials, double eta, std::uint64_t seed);

}  // namespace dpssband::kernels
