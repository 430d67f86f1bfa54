#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "dpssband/slepian.hpp"

namespace dpssband {

/// J equal bands covering (-1/2, 1/2); centers[i] = -1/2 + (i + 1/2)/J.
struct BandGrid {
  int j = 0;
  std::vector<double> centers;
};

BandGrid make_band_grid(int j);

/// Ordered set of distinct band indices.
struct BlockSupport {
  std::vector<int> indices;  // sorted ascending, no duplicates

  bool empty() const { return indices.empty(); }
  int size() const { return static_cast<int>(indices.size()); }
};

BlockSupport make_support(std::vector<int> indices);

/// Modulation vector, entry m = e^{j 2 pi f_c m}.
Eigen::VectorXcd modulation_phase(double f_c, int n);

/// Concatenation of J per-band blocks, block i the first k DPSS vectors for
/// (N, W = 1/(2J)) modulated to the band center. Blocks share the real DPSS
/// matrix; complex blocks are materialized on demand.
struct MultibandDictionary {
  int n = 0;
  int j = 0;
  int k = 0;
  double w = 0.0;  // 1/(2J)
  BandGrid grid;
  Eigen::MatrixXd basis;        // n x k real DPSS vectors
  Eigen::VectorXd eigenvalues;  // length k

  int dim() const { return k * j; }  // D = kJ

  Eigen::VectorXcd phase(int band) const;
  Eigen::MatrixXcd block(int band) const;
  Eigen::VectorXcd column(int band, int col) const;
  /// Dense N x kJ view, band-major; for Gram/SVD diagnostics only.
  Eigen::MatrixXcd dense() const;
};

MultibandDictionary build_dictionary(int n, int j, int k);

/// x = Psi alpha (alpha band-major, k entries per band).
Eigen::VectorXcd dict_apply(const MultibandDictionary& dict,
                            const Eigen::VectorXcd& coeffs);
/// alpha = Psi^H x.
Eigen::VectorXcd dict_adjoint(const MultibandDictionary& dict,
                              const Eigen::VectorXcd& x);

/// Max |<q1, q2>| over column pairs from distinct bands (0 when J = 1).
double max_cross_band_coherence(const MultibandDictionary& dict);

/// Extreme singular values of the dense dictionary.
std::pair<double, double> gram_singular_extremes(
    const MultibandDictionary& dict);

/// Orthonormal basis for the numerical range of Psi_I; rank is the count of
/// singular values above svd_tol times the largest.
Eigen::MatrixXcd reduced_basis(const MultibandDictionary& dict,
                               const BlockSupport& support, double svd_tol);

/// Orthonormal DFT dictionary, column n at frequency (n - N/2 + 1)/N.
Eigen::MatrixXcd build_dft_dictionary(int n);

}  // namespace dpssband
