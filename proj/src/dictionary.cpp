#include "dpssband/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpssband/kernels.hpp"
#include "dpssband/linalg.hpp"

namespace dpssband {

BandGrid make_band_grid(int j) {
  if (j < 1) throw std::invalid_argument("parameter-out-of-range: J >= 1");
  BandGrid grid;
  grid.j = j;
  grid.centers.resize(j);
  for (int i = 0; i < j; ++i) grid.centers[i] = -0.5 + (i + 0.5) / j;
  return grid;
}

BlockSupport make_support(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return BlockSupport{std::move(indices)};
}

Eigen::VectorXcd modulation_phase(double f_c, int n) {
  Eigen::VectorXcd out(n);
  for (int m = 0; m < n; ++m) {
    double a = 2.0 * M_PI * f_c * m;
    out[m] = std::complex<double>(std::cos(a), std::sin(a));
  }
  return out;
}

Eigen::VectorXcd MultibandDictionary::phase(int band) const {
  return modulation_phase(grid.centers[band], n);
}

Eigen::MatrixXcd MultibandDictionary::block(int band) const {
  return phase(band).asDiagonal() * basis.cast<std::complex<double>>();
}

Eigen::VectorXcd MultibandDictionary::column(int band, int col) const {
  return phase(band).cwiseProduct(basis.col(col).cast<std::complex<double>>());
}

Eigen::MatrixXcd MultibandDictionary::dense() const {
  Eigen::MatrixXcd out(n, dim());
  for (int b = 0; b < j; ++b) out.middleCols(b * k, k) = block(b);
  return out;
}

MultibandDictionary build_dictionary(int n, int j, int k) {
  if (n < 1 || j < 1 || k < 1 || k > n)
    throw std::invalid_argument(
        "parameter-out-of-range: require N >= 1, J >= 1, 1 <= k <= N");
  MultibandDictionary dict;
  dict.n = n;
  dict.j = j;
  dict.k = k;
  dict.w = 1.0 / (2.0 * j);
  dict.grid = make_band_grid(j);
  if (j == 1) {
    // W = 1/2: the prolate matrix degenerates to the identity, every
    // orthonormal basis is a DPSS basis; use canonical columns
    dict.basis = Eigen::MatrixXd::Identity(n, k);
    dict.eigenvalues = Eigen::VectorXd::Constant(k, 1.0 - 1e-18);
  } else {
    DpssBasis basis = build_dpss({n, dict.w}, k);
    dict.basis = std::move(basis.vectors);
    dict.eigenvalues = std::move(basis.eigenvalues);
  }
  return dict;
}

Eigen::VectorXcd dict_apply(const MultibandDictionary& dict,
                            const Eigen::VectorXcd& coeffs) {
  if (coeffs.size() != dict.dim())
    throw std::invalid_argument("dimension-mismatch");
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dict.n);
  for (int b = 0; b < dict.j; ++b) {
    Eigen::VectorXcd sub = dict.basis * coeffs.segment(b * dict.k, dict.k);
    x += dict.phase(b).cwiseProduct(sub);
  }
  return x;
}

Eigen::VectorXcd dict_adjoint(const MultibandDictionary& dict,
                              const Eigen::VectorXcd& x) {
  if (x.size() != dict.n) throw std::invalid_argument("dimension-mismatch");
  Eigen::VectorXcd coeffs(dict.dim());
  for (int b = 0; b < dict.j; ++b) {
    Eigen::VectorXcd demod = dict.phase(b).conjugate().cwiseProduct(x);
    coeffs.segment(b * dict.k, dict.k) = dict.basis.transpose() * demod;
  }
  return coeffs;
}

double max_cross_band_coherence(const MultibandDictionary& dict) {
  if (dict.j < 2) return 0.0;
  return kernels::cross_band_coherence(dict);
}

std::pair<double, double> gram_singular_extremes(
    const MultibandDictionary& dict) {
  // Gram is block Toeplitz in the band difference; assemble from the J-1
  // difference blocks plus identity diagonal
  int d_total = dict.dim();
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(d_total, d_total);
  Eigen::MatrixXcd basis_c = dict.basis.cast<std::complex<double>>();
  for (int d = 1; d < dict.j; ++d) {
    Eigen::VectorXcd twiddle(dict.n);
    double step = 2.0 * M_PI * d / dict.j;
    for (int m = 0; m < dict.n; ++m)
      twiddle[m] =
          std::complex<double>(std::cos(step * m), std::sin(step * m));
    Eigen::MatrixXcd block_d =
        basis_c.adjoint() * (twiddle.asDiagonal() * basis_c);
    for (int i = 0; i + d < dict.j; ++i) {
      gram.block(i * dict.k, (i + d) * dict.k, dict.k, dict.k) = block_d;
      gram.block((i + d) * dict.k, i * dict.k, dict.k, dict.k) =
          block_d.adjoint();
    }
  }
  Eigen::VectorXd evals = la::eigvals_hermitian(std::move(gram));
  double lo = std::sqrt(std::max(evals.minCoeff(), 0.0));
  double hi = std::sqrt(std::max(evals.maxCoeff(), 0.0));
  return {lo, hi};
}

Eigen::MatrixXcd reduced_basis(const MultibandDictionary& dict,
                               const BlockSupport& support, double svd_tol) {
  if (support.empty()) throw std::invalid_argument("empty-support");
  if (!(svd_tol > 0.0))
    throw std::invalid_argument("parameter-out-of-range: svd_tol > 0");
  Eigen::MatrixXcd stacked(dict.n, dict.k * support.size());
  for (int i = 0; i < support.size(); ++i)
    stacked.middleCols(i * dict.k, dict.k) = dict.block(support.indices[i]);
  Eigen::MatrixXcd u, v;
  Eigen::VectorXd s;
  la::svd_econ(stacked, u, s, v);
  double cutoff = svd_tol * s[0];
  int rank = 0;
  while (rank < s.size() && s[rank] > cutoff) ++rank;
  return u.leftCols(rank);
}

Eigen::MatrixXcd build_dft_dictionary(int n) {
  if (n < 1) throw std::invalid_argument("parameter-out-of-range: N >= 1");
  Eigen::MatrixXcd psi(n, n);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int c = 0; c < n; ++c) {
    double f = static_cast<double>(c - n / 2 + 1) / n;
    for (int m = 0; m < n; ++m) {
      double a = 2.0 * M_PI * f * m;
      psi(m, c) = scale * std::complex<double>(std::cos(a), std::sin(a));
    }
  }
  return psi;
}

}  // namespace dpssband
