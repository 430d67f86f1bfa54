#include "dpssband/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace dpssband {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

double sinc(double t) {
  if (t == 0.0) return 1.0;
  double pt = M_PI * t;
  return std::sin(pt) / pt;
}

}  // namespace

Dft::Dft(int n) : n_(n) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  buf_in_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  buf_out_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  plan_fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_),
                               FFTW_FORWARD, FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_),
                               FFTW_BACKWARD, FFTW_ESTIMATE);
}

Dft::~Dft() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  fftw_free(buf_in_);
  fftw_free(buf_out_);
}

void Dft::forward(const std::complex<double>* in, std::complex<double>* out) {
  for (int i = 0; i < n_; ++i) buf_in_[i] = in[i];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  for (int i = 0; i < n_; ++i) out[i] = buf_out_[i];
}

void Dft::inverse(const std::complex<double>* in, std::complex<double>* out) {
  for (int i = 0; i < n_; ++i) buf_in_[i] = in[i];
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  for (int i = 0; i < n_; ++i) out[i] = buf_out_[i];
}

ProlateApplier::ProlateApplier(int n, double w) : n_(n), dft_(2 * n) {
  // circulant embedding of the symmetric Toeplitz kernel
  Eigen::VectorXcd circ = Eigen::VectorXcd::Zero(2 * n);
  for (int m = 0; m < n; ++m) circ[m] = 2.0 * w * sinc(2.0 * w * m);
  for (int m = 1; m < n; ++m) circ[2 * n - m] = circ[m];
  kernel_fft_.resize(2 * n);
  dft_.forward(circ.data(), kernel_fft_.data());
}

Eigen::VectorXd ProlateApplier::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(2 * n_);
  padded.head(n_) = x.cast<std::complex<double>>();
  Eigen::VectorXcd freq(2 * n_);
  dft_.forward(padded.data(), freq.data());
  freq.array() *= kernel_fft_.array();
  Eigen::VectorXcd back(2 * n_);
  dft_.inverse(freq.data(), back.data());
  return back.head(n_).real() / static_cast<double>(2 * n_);
}

double ProlateApplier::rayleigh(const Eigen::VectorXd& v) const {
  return v.dot(apply(v));
}

}  // namespace dpssband
