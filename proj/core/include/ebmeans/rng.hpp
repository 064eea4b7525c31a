// Deterministic random streams.
//
// All variate generation is implemented on top of std::mt19937_64, whose
// output sequence is fixed by the standard. None of the std <random>
// distributions are used (their algorithms are implementation-defined), so
// identical seeds give bit-identical streams on every platform.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace ebmeans {

// splitmix64 finalizer; the mixing step behind all seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream-splitting rule: a stream index hashed into a root seed. Used for
// per-replication and per-purpose streams so that parallel work never
// shares or reuses a generator.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return mix64(root ^ mix64(stream));
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                    std::uint64_t b) {
  return derive_seed(derive_seed(root, a), b);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1): 53 random bits scaled.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe to pass through log().
  double uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the second variate of each pair is
  // cached, so draws alternate between generating and returning the spare.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 2.0 * kPi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape < 1 is boosted
  // through Gamma(shape + 1) and a power of a uniform.
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform_pos();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Beta(a, b) as G_a / (G_a + G_b). Stable for the large, lopsided shapes
  // the omega update produces; the result is clamped strictly inside (0, 1)
  // so that log(w) and log1p(-w) stay finite.
  double beta(double a, double b) {
    const double g1 = gamma(a);
    const double g2 = gamma(b);
    double w = g1 / (g1 + g2);
    if (!(w > kUnitLo)) w = kUnitLo;
    if (!(w < kUnitHi)) w = kUnitHi;
    return w;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr double kUnitLo = 0x1.0p-1074;  // smallest positive double
  static constexpr double kUnitHi = 1.0 - 0x1.0p-53;

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ebmeans
