#pragma once

#include "lieflag/lie_core.hpp"

#include <cstdint>
#include <numbers>
#include <random>

namespace lieflag {

/// Seeded sampler. Uniform deviates are derived from the raw mt19937_64
/// stream directly (not through std::uniform_real_distribution), so a given
/// seed reproduces the same sequence everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }

  bool coin() { return (eng_() & 1ull) != 0; }

  double gaussian() {
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Vec3 unit_vector() {
    for (;;) {
      const Vec3 v(gaussian(), gaussian(), gaussian());
      const double n = v.norm();
      if (n > 1e-6) return v / n;
    }
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace lieflag
