#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "dpssband/dictionary.hpp"
#include "dpssband/slepian.hpp"

namespace dpssband {

struct MultibandSpec {
  int j = 0;
  int k_bands = 0;  // occupied bands
  int tones_per_band = 50;
  std::uint64_t seed = 0;
  std::optional<BlockSupport> support;  // drawn uniformly when absent
};

/// e_f: entry n = e^{j 2 pi f n}; ||e_f||^2 = N.
Eigen::VectorXcd sampled_exponential(int n, double f);

/// Sum over occupied bands of random tones with frequencies uniform in the
/// band (off the Nyquist grid) and CN(0,1) coefficients.
std::pair<Eigen::VectorXcd, BlockSupport> synth_multiband(
    int n, const MultibandSpec& spec);

/// Zero-mean complex Gaussian draw with covariance
/// (1/2W) E_{f_c} B_{N,W} E_{f_c}^H, factored through the full DPSS spectrum.
Eigen::VectorXcd bandpass_process_sample(int n, double f_c, double w,
                                         std::uint64_t seed);
/// Same, reusing a prebuilt full-spectrum basis (full.k == n).
Eigen::VectorXcd bandpass_process_sample(const DpssBasis& full, double f_c,
                                         std::uint64_t seed);

/// Sum of independent per-band draws scaled so E||x||^2 = N.
Eigen::VectorXcd multiband_process_sample(int n, const BandGrid& grid,
                                          const BlockSupport& support,
                                          std::uint64_t seed);

/// y + e with white complex Gaussian e rescaled so the realized MSNR equals
/// msnr_db exactly. +inf returns y unchanged.
Eigen::VectorXcd add_noise_for_msnr(const Eigen::VectorXcd& y, double msnr_db,
                                    std::uint64_t seed);

/// Finite-window DTFT on a uniform grid over [-1/2, 1/2).
Eigen::VectorXcd dtft_grid(const Eigen::VectorXcd& x, int grid_points);

}  // namespace dpssband
