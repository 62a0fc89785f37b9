#pragma once

// Portable deterministic sampling: the distributions are computed from raw
// mt19937_64 output so the streams do not depend on the standard library.

#include "cohom1/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cohom1 {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [-half_width, half_width).
  double centered(double half_width) { return (2.0 * unit() - 1.0) * half_width; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Standard normal by Box-Muller (one value per call, no caching).
  double gaussian()
  {
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Vector gaussian_vector(int dim)
  {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gaussian();
    return v;
  }

  std::uint64_t bits() { return engine_(); }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed derivation so trial i is reproducible independently of order.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace cohom1
