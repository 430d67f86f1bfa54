#include "dpssband/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dpssband::io {

namespace {

[[noreturn]] void io_failure(const std::string& path, const char* what) {
  throw std::runtime_error(std::string("io-failure: ") + what + ": " + path);
}

}  // namespace

void write_slep_matrix(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_failure(path, "cannot open for writing");
  std::uint32_t rows = static_cast<std::uint32_t>(m.rows());
  std::uint32_t cols = static_cast<std::uint32_t>(m.cols());
  std::uint32_t flags = 0;
  out.write("SLEP", 4);
  out.write(reinterpret_cast<const char*>(&rows), 4);
  out.write(reinterpret_cast<const char*>(&cols), 4);
  out.write(reinterpret_cast<const char*>(&flags), 4);
  // Eigen default storage is column-major
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double)) * m.size());
  if (!out) io_failure(path, "write failed");
}

Eigen::MatrixXd read_slep_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_failure(path, "cannot open for reading");
  char magic[4];
  std::uint32_t rows = 0, cols = 0, flags = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&rows), 4);
  in.read(reinterpret_cast<char*>(&cols), 4);
  in.read(reinterpret_cast<char*>(&flags), 4);
  if (!in || std::memcmp(magic, "SLEP", 4) != 0 || flags != 0)
    io_failure(path, "bad header");
  Eigen::MatrixXd m(rows, cols);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(double)) * m.size());
  if (!in) io_failure(path, "truncated payload");
  return m;
}

void write_eigenvalues_csv(const std::string& path,
                           const Eigen::VectorXd& eigenvalues) {
  std::ofstream out(path);
  if (!out) io_failure(path, "cannot open for writing");
  out << "index,lambda\n";
  out << std::setprecision(17);
  for (int i = 0; i < eigenvalues.size(); ++i)
    out << i << ',' << eigenvalues[i] << '\n';
  if (!out) io_failure(path, "write failed");
}

void write_complex_csv(const std::string& path, const Eigen::VectorXcd& x) {
  std::ofstream out(path);
  if (!out) io_failure(path, "cannot open for writing");
  out << "index,re,im\n";
  out << std::setprecision(17);
  for (int i = 0; i < x.size(); ++i)
    out << i << ',' << x[i].real() << ',' << x[i].imag() << '\n';
  if (!out) io_failure(path, "write failed");
}

Eigen::VectorXcd read_complex_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_failure(path, "cannot open for reading");
  std::string line;
  if (!std::getline(in, line)) io_failure(path, "missing header");
  std::vector<std::complex<double>> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    if (!std::getline(ss, field, ',')) io_failure(path, "bad row");
    if (!std::getline(ss, field, ',')) io_failure(path, "bad row");
    double re = std::stod(field);
    if (!std::getline(ss, field, ',')) io_failure(path, "bad row");
    double im = std::stod(field);
    values.emplace_back(re, im);
  }
  Eigen::VectorXcd x(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) x[i] = values[i];
  return x;
}

void write_support_json(const std::string& path, const BlockSupport& support) {
  std::ofstream out(path);
  if (!out) io_failure(path, "cannot open for writing");
  out << "{ \"support\": [";
  for (int i = 0; i < support.size(); ++i) {
    if (i) out << ", ";
    out << support.indices[i];
  }
  out << "] }\n";
  if (!out) io_failure(path, "write failed");
}

}  // namespace dpssband::io
