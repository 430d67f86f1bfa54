#pragma once

#include <Eigen/Dense>

namespace dpssband::la {

/// Economy SVD of a complex matrix (LAPACK divide and conquer).
/// U is m x r, V is n x r with r = min(m, n); A = U diag(s) V^H.
void svd_econ(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& u,
              Eigen::VectorXd& s, Eigen::MatrixXcd& v);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd eigvals_hermitian(Eigen::MatrixXcd a);

/// Full eigendecomposition of a real symmetric matrix, ascending eigenvalues.
void eig_symmetric(Eigen::MatrixXd a, Eigen::VectorXd& values,
                   Eigen::MatrixXd& vectors);

/// Top-k eigenpairs (largest eigenvalues) of a symmetric tridiagonal matrix
/// given by its diagonal and subdiagonal. Vectors come back with the largest
/// eigenvalue in column 0.
void eig_tridiagonal_topk(const Eigen::VectorXd& diag,
                          const Eigen::VectorXd& sub, int k,
                          Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

/// Least squares min ||y - B c|| with optional norm budget ||c|| <= gamma
/// (trust-region style secular equation on the Lagrange multiplier).
/// gamma = +inf gives the plain pseudoinverse solution; rank is controlled by
/// svd_tol relative to the largest singular value.
Eigen::VectorXcd ls_norm_constrained(const Eigen::MatrixXcd& b,
                                     const Eigen::VectorXcd& y, double gamma,
                                     double svd_tol);

}  // namespace dpssband::la
