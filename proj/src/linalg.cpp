#include "dpssband/linalg.hpp"

#include <complex>

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dpssband::la {

namespace {

[[noreturn]] void lapack_failure(const char* routine, int info) {
  throw std::runtime_error(std::string("eigensolver-failure: ") + routine +
                           " info=" + std::to_string(info));
}

}  // namespace

void svd_econ(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& u,
              Eigen::VectorXd& s, Eigen::MatrixXcd& v) {
  int m = static_cast<int>(a.rows());
  int n = static_cast<int>(a.cols());
  int r = std::min(m, n);
  Eigen::MatrixXcd work = a;
  u.resize(m, r);
  s.resize(r);
  Eigen::MatrixXcd vh(r, n);
  int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, work.data(), m,
                            s.data(), u.data(), m, vh.data(), r);
  if (info > 0) {
    // divide-and-conquer occasionally fails to converge; QR iteration is
    // slower but more robust
    work = a;
    std::vector<double> superb(std::max(r - 1, 1));
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', m, n, work.data(), m,
                          s.data(), u.data(), m, vh.data(), r, superb.data());
  }
  if (info != 0) lapack_failure("zgesdd/zgesvd", info);
  v = vh.adjoint();
}

Eigen::VectorXd eigvals_hermitian(Eigen::MatrixXcd a) {
  int n = static_cast<int>(a.rows());
  Eigen::VectorXd w(n);
  int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  if (info != 0) lapack_failure("zheevd", info);
  return w;
}

void eig_symmetric(Eigen::MatrixXd a, Eigen::VectorXd& values,
                   Eigen::MatrixXd& vectors) {
  int n = static_cast<int>(a.rows());
  values.resize(n);
  int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, values.data());
  if (info != 0) lapack_failure("dsyevd", info);
  vectors = std::move(a);
}

void eig_tridiagonal_topk(const Eigen::VectorXd& diag,
                          const Eigen::VectorXd& sub, int k,
                          Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  int n = static_cast<int>(diag.size());
  Eigen::VectorXd d = diag;
  Eigen::VectorXd e = sub;
  values.resize(n);
  Eigen::MatrixXd z(n, k);
  std::vector<lapack_int> isuppz(2 * std::max(1, k));
  lapack_int found = 0;
  int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(),
                            0.0, 0.0, n - k + 1, n, 0.0, &found, values.data(),
                            z.data(), n, isuppz.data());
  if (info != 0 || found != k) lapack_failure("dstevr", info);
  // ascending from LAPACK; DPSS order wants the largest first
  Eigen::VectorXd vals(k);
  vectors.resize(n, k);
  for (int i = 0; i < k; ++i) {
    vals[i] = values[k - 1 - i];
    vectors.col(i) = z.col(k - 1 - i);
  }
  values = vals;
}

Eigen::VectorXcd ls_norm_constrained(const Eigen::MatrixXcd& b,
                                     const Eigen::VectorXcd& y, double gamma,
                                     double svd_tol) {
  if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
  Eigen::MatrixXcd u, v;
  Eigen::VectorXd s;
  svd_econ(b, u, s, v);
  int r = static_cast<int>(s.size());
  double cutoff = s.size() > 0 ? svd_tol * s[0] : 0.0;
  Eigen::VectorXcd beta = u.adjoint() * y;

  Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(r);
  double norm_sq = 0.0;
  for (int i = 0; i < r; ++i) {
    if (s[i] > cutoff) {
      coeff[i] = beta[i] / s[i];
      norm_sq += std::norm(coeff[i]);
    }
  }
  if (!std::isfinite(gamma) || norm_sq <= gamma * gamma) return v * coeff;

  // secular equation phi(nu) = sum (s_i |beta_i| / (s_i^2 + nu))^2 = gamma^2,
  // monotone decreasing in nu > 0
  auto phi = [&](double nu) {
    double acc = 0.0;
    for (int i = 0; i < r; ++i) {
      if (s[i] <= cutoff) continue;
      double t = s[i] * std::abs(beta[i]) / (s[i] * s[i] + nu);
      acc += t * t;
    }
    return acc;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (phi(hi) > gamma * gamma) {
    hi *= 4.0;
    if (hi > 1e300) throw std::runtime_error("root-find-failure");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (phi(mid) > gamma * gamma)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * (1.0 + hi)) break;
  }
  double nu = 0.5 * (lo + hi);
  for (int i = 0; i < r; ++i) {
    coeff[i] = (s[i] > cutoff)
                   ? s[i] * beta[i] / (s[i] * s[i] + nu)
                   : std::complex<double>(0.0, 0.0);
  }
  return v * coeff;
}

}  // namespace dpssband::la
