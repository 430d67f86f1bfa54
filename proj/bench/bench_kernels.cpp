// Timing comparison between the serial reference kernels and their
// OpenMP-parallel counterparts. Not a correctness test; the equivalence
// checks live in the test suite.

#include <chrono>
#include <cstdio>

#include "dpssband/dictionary.hpp"
#include "dpssband/kernels.hpp"
#include "dpssband/rng.hpp"
#include "dpssband/slepian.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double time_call(F&& f, int repeats) {
  auto start = Clock::now();
  for (int i = 0; i < repeats; ++i) f();
  return seconds_since(start) / repeats;
}

}  // namespace

int main() {
  using namespace dpssband;

  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]",
              "speedup");

  {
    int n = 2048, k = 64;
    DpssBasis basis = build_dpss({n, 1.0 / 256}, k);
    double ts = time_call(
        [&] { kernels::rayleigh_eigenvalues_serial(n, 1.0 / 256, basis.vectors); },
        3);
    double tp = time_call(
        [&] { kernels::rayleigh_eigenvalues(n, 1.0 / 256, basis.vectors); }, 3);
    std::printf("%-28s %12.5f %12.5f %8.2f\n", "rayleigh-eigenvalues", ts, tp,
                ts / tp);
  }

  {
    MultibandDictionary dict = build_dictionary(1024, 16, 24);
    double ts =
        time_call([&] { kernels::cross_band_coherence_serial(dict); }, 3);
    double tp = time_call([&] { kernels::cross_band_coherence(dict); }, 3);
    std::printf("%-28s %12.5f %12.5f %8.2f\n", "cross-band-coherence", ts, tp,
                ts / tp);
  }

  {
    int m = 128, n = 1024, trials = 100;
    Rng rng(11);
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.cgaussian();
    double ts = time_call(
        [&] {
          kernels::probe_failures_serial(OperatorKind::dense_gaussian, m, n, x,
                                         trials, 0.5, 1);
        },
        2);
    double tp = time_call(
        [&] {
          kernels::probe_failures(OperatorKind::dense_gaussian, m, n, x,
                                  trials, 0.5, 1);
        },
        2);
    std::printf("%-28s %12.5f %12.5f %8.2f\n", "concentration-probe", ts, tp,
                ts / tp);
  }

  return 0;
}
