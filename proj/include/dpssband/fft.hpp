#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dpssband {

/// Fixed-size complex DFT backed by FFTW. Plan creation is serialized
/// internally; each instance owns its buffers, so use one per thread.
class Dft {
 public:
  explicit Dft(int n);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  int size() const { return n_; }

  /// out[k] = sum_n in[n] e^{-j2pi kn/N}
  void forward(const std::complex<double>* in, std::complex<double>* out);
  /// out[n] = sum_k in[k] e^{+j2pi kn/N}   (unnormalized)
  void inverse(const std::complex<double>* in, std::complex<double>* out);

 private:
  int n_;
  void* plan_fwd_;
  void* plan_inv_;
  std::complex<double>* buf_in_;
  std::complex<double>* buf_out_;
};

/// Applies the prolate (sinc-kernel Toeplitz) matrix B_{N,W} via circulant
/// embedding, O(N log N) per product.
class ProlateApplier {
 public:
  ProlateApplier(int n, double w);

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  /// Rayleigh quotient v^T B v for a unit-norm v.
  double rayleigh(const Eigen::VectorXd& v) const;

 private:
  int n_;
  mutable Dft dft_;
  Eigen::VectorXcd kernel_fft_;  // length 2n
};

}  // namespace dpssband
