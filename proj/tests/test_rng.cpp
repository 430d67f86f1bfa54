#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "dpssband/rng.hpp"

using namespace dpssband;

TEST_CASE("same seed reproduces the sequence") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds and streams diverge") {
  Rng a(42), b(43), c(42, 1);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 64; ++i) {
    std::uint64_t va = a.next_u64();
    if (va == b.next_u64()) ++same_ab;
    if (va == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("uniform lies in [0,1) with mean near 1/2") {
  Rng rng(7);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("gaussian has zero mean and unit variance") {
  Rng rng(11);
  double sum = 0.0, sumsq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double g = rng.gaussian();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("complex gaussian has unit second moment") {
  Rng rng(13);
  double sumsq = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) sumsq += std::norm(rng.cgaussian());
  CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("below stays under the bound") {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) CHECK(rng.below(17) < 17);
}

TEST_CASE("distinct draws without replacement") {
  Rng rng(5);
  auto idx = rng.distinct(100, 20);
  REQUIRE(idx.size() == 20);
  std::set<int> seen(idx.begin(), idx.end());
  CHECK(seen.size() == 20);
  for (int i : idx) {
    CHECK(i >= 0);
    CHECK(i < 100);
  }
  auto all = rng.distinct(10, 10);
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 10; ++i) CHECK(all[i] == i);
}

TEST_CASE("derive_seed is deterministic and sensitive to both arguments") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  std::set<std::uint64_t> seeds;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) seeds.insert(derive_seed(99, a, b));
  CHECK(seeds.size() == 256);
}
