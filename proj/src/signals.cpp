#include "dpssband/signals.hpp"

#include <cmath>
#include <stdexcept>

#include "dpssband/fft.hpp"
#include "dpssband/rng.hpp"

namespace dpssband {

Eigen::VectorXcd sampled_exponential(int n, double f) {
  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * M_PI * f * i;
    out[i] = std::complex<double>(std::cos(a), std::sin(a));
  }
  return out;
}

std::pair<Eigen::VectorXcd, BlockSupport> synth_multiband(
    int n, const MultibandSpec& spec) {
  if (n < 1 || spec.j < 1 || spec.k_bands < 1 || spec.k_bands > spec.j ||
      spec.tones_per_band < 1)
    throw std::invalid_argument("parameter-out-of-range");
  Rng rng(spec.seed);
  BandGrid grid = make_band_grid(spec.j);
  double half_width = 0.5 / spec.j;

  BlockSupport support;
  if (spec.support) {
    support = *spec.support;
    if (support.size() != spec.k_bands)
      throw std::invalid_argument("support-size-mismatch");
  } else {
    support = make_support(rng.distinct(spec.j, spec.k_bands));
  }

  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  for (int band : support.indices) {
    double lo = grid.centers[band] - half_width;
    for (int t = 0; t < spec.tones_per_band; ++t) {
      double f = lo + rng.uniform() * (2.0 * half_width);
      std::complex<double> c = rng.cgaussian();
      for (int i = 0; i < n; ++i) {
        double a = 2.0 * M_PI * f * i;
        x[i] += c * std::complex<double>(std::cos(a), std::sin(a));
      }
    }
  }
  return {std::move(x), std::move(support)};
}

Eigen::VectorXcd bandpass_process_sample(const DpssBasis& full, double f_c,
                                         std::uint64_t seed) {
  int n = full.params.n;
  if (full.k != n) throw std::invalid_argument("full-spectrum-basis-required");
  Rng rng(seed);
  Eigen::VectorXcd g(n);
  for (int i = 0; i < n; ++i) g[i] = rng.cgaussian();
  double inv_2w = 1.0 / (2.0 * full.params.w);
  Eigen::VectorXcd weighted(n);
  for (int i = 0; i < n; ++i)
    weighted[i] = std::sqrt(full.eigenvalues[i] * inv_2w) * g[i];
  Eigen::VectorXcd base = full.vectors * weighted;
  if (f_c == 0.0) return base;
  return modulation_phase(f_c, n).cwiseProduct(base);
}

Eigen::VectorXcd bandpass_process_sample(int n, double f_c, double w,
                                         std::uint64_t seed) {
  DpssBasis full = build_dpss({n, w}, n);
  return bandpass_process_sample(full, f_c, seed);
}

Eigen::VectorXcd multiband_process_sample(int n, const BandGrid& grid,
                                          const BlockSupport& support,
                                          std::uint64_t seed) {
  if (support.empty()) throw std::invalid_argument("empty-support");
  double w = 1.0 / (2.0 * grid.j);
  DpssBasis full = build_dpss({n, w}, n);
  double scale = 1.0 / std::sqrt(static_cast<double>(support.size()));
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < support.size(); ++i) {
    int band = support.indices[i];
    std::uint64_t band_seed = derive_seed(seed, 0xBA5Eull, band);
    x += scale * bandpass_process_sample(full, grid.centers[band], band_seed);
  }
  return x;
}

Eigen::VectorXcd add_noise_for_msnr(const Eigen::VectorXcd& y, double msnr_db,
                                    std::uint64_t seed) {
  if (!std::isfinite(msnr_db)) return y;
  Rng rng(seed);
  Eigen::VectorXcd e(y.size());
  for (int i = 0; i < y.size(); ++i) e[i] = rng.cgaussian();
  double target = y.squaredNorm() * std::pow(10.0, -msnr_db / 10.0);
  double have = e.squaredNorm();
  if (have == 0.0) return y;
  return y + std::sqrt(target / have) * e;
}

Eigen::VectorXcd dtft_grid(const Eigen::VectorXcd& x, int grid_points) {
  int n = static_cast<int>(x.size());
  if (grid_points < n)
    throw std::invalid_argument("parameter-out-of-range: grid >= N");
  // f_g = -1/2 + g/G; the half-turn shift folds into a (-1)^n prefactor
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(grid_points);
  for (int i = 0; i < n; ++i) padded[i] = (i & 1) ? -x[i] : x[i];
  Dft dft(grid_points);
  Eigen::VectorXcd out(grid_points);
  dft.forward(padded.data(), out.data());
  return out;
}

}  // namespace dpssband
