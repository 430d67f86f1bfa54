#pragma once

#include <Eigen/Dense>
#include <string>

#include "dpssband/dictionary.hpp"

namespace dpssband::io {

/// Binary matrix file: 16-byte header (magic "SLEP", u32 rows, u32 cols,
/// u32 flags = 0) then column-major little-endian float64.
void write_slep_matrix(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_slep_matrix(const std::string& path);

void write_eigenvalues_csv(const std::string& path,
                           const Eigen::VectorXd& eigenvalues);

void write_complex_csv(const std::string& path, const Eigen::VectorXcd& x);
Eigen::VectorXcd read_complex_csv(const std::string& path);

void write_support_json(const std::string& path, const BlockSupport& support);

}  // namespace dpssband::io
