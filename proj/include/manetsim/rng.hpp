#pragma once

#include <array>
#include <cstdint>

namespace manetsim {

// One named substream of the scenario seed. The generator is xoshiro256**
// seeded through splitmix64, so every (seed, label, substream) triple yields
// the same sequence on every platform. Pinned by golden-value tests; do not
// change the constants without updating those tests.
class RngStream {
 public:
  enum class Label : std::uint64_t {
    Mobility = 1,
    Traffic = 2,
    Topology = 3,
    Jitter = 4,
  };

  RngStream(std::uint64_t seed, Label label, std::uint64_t substream = 0);

  std::uint64_t next_u64();
  // Uniform in [0, 1), 53-bit resolution.
  double next_unit();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n), n > 0. Fixed-point multiply, not modulo.
  std::uint64_t uniform_u64(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace manetsim
