#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace dpssband {

/// Counter-based 64-bit generator (SplitMix64 finalizer over key + i*gamma).
/// Output i depends only on (seed, stream, i), so independent streams can be
/// split off for parallel trials and replayed deterministically.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(finalize(seed ^ finalize(stream + kGamma))) {}

  std::uint64_t next_u64() { return finalize(key_ + (++counter_) * kGamma); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<__uint128_t>(next_u64()) * bound) >> 64);
  }

  /// Standard real Gaussian, Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Circular complex Gaussian CN(0, 1): E|z|^2 = 1.
  std::complex<double> cgaussian() {
    constexpr double half = 0.70710678118654752440;
    double re = gaussian();
    double im = gaussian();
    return {re * half, im * half};
  }

  /// k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<int> distinct(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
      out[i] = pool[i];
    }
    return out;
  }

  static std::uint64_t finalize(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stable seed derivation for sweep trials: seed(point, trial).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b) {
  return Rng::finalize(base ^ Rng::finalize(a + 0x9E3779B97F4A7C15ull) ^
                       Rng::finalize(b + 0xD1B54A32D192ED03ull));
}

}  // namespace dpssband
