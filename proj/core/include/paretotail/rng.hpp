#pragma once

// Small counter-style PRNG used throughout the Monte Carlo kernels.
// Every logical stream (simulation path, agent slot) is seeded as
// mix(seed, stream_id), so results do not depend on how work is split
// across threads.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace paretotail {

/// splitmix64 step: advances the state and returns the next 64-bit output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic per-stream seed derived from a master seed and a stream id.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream_id * 0x9e3779b97f4a7c15ULL);
  splitmix64(s);
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream_id) : state_(stream_seed(seed, stream_id)) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform draw on (0, 1); never returns 0 or 1.
  double uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u == 0.0 ? 0x1.0p-53 : u;
  }

  /// Pair of independent standard normals (Box-Muller).
  void normal_pair(double& z0, double& z1) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
  }

  double normal() {
    double z0, z1;
    normal_pair(z0, z1);
    return z0;
  }

 private:
  std::uint64_t state_;
};

}  // namespace paretotail
