#pragma once

// Shared helpers for the property tests: a seeded generator and a few
// random-input factories.

#include <cstdint>
#include <random>
#include <vector>

#include "scmap/scmap.hpp"

namespace scmap::proptest {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }

  /// Valid spec with 1..max_n prevertices, exponents in (-1, 1) and sum of
  /// exponents in [-2, 2]; prevertices at least 0.4 apart.
  SCSpec spec(int max_n = 4) {
    const int n = integer(1, max_n);
    std::vector<PreVertex> pv;
    double x = uniform(-3.0, -1.0);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      double k = uniform(-0.9, 0.9);
      if (std::abs(sum + k) > 1.9)
        k = -k;
      sum += k;
      pv.push_back({x, k});
      x += uniform(0.4, 1.6);
    }
    return SCSpec(std::polar(uniform(0.5, 2.0), uniform(-3.0, 3.0)), complex_in(-1, 1, -1, 1), pv);
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace scmap::proptest
