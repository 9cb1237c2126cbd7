#include <array>
#include <cstdint>

#include "doctest.h"
#include "manetsim/rng.hpp"

using namespace manetsim;

namespace {

// Independent re-implementation of the pinned generator (splitmix64-seeded
// xoshiro256**), used as the oracle for the library's stream.
struct RefGen {
  std::array<std::uint64_t, 4> s;

  static std::uint64_t splitmix(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  RefGen(std::uint64_t seed, std::uint64_t label, std::uint64_t substream) {
    std::uint64_t mix = seed;
    splitmix(mix);
    mix ^= label * 0x9e3779b97f4a7c15ull;
    splitmix(mix);
    mix ^= (substream + 1) * 0xbf58476d1ce4e5b9ull;
    for (auto& w : s) w = splitmix(mix);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t next() {
    const std::uint64_t out = rotl(s[1] * 5, 7) * 9;
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return out;
  }
};

}  // namespace

TEST_CASE("stream matches the documented generator") {
  for (std::uint64_t seed : {1ull, 2ull, 42ull, 0xdeadbeefull}) {
    for (auto label : {RngStream::Label::Mobility, RngStream::Label::Traffic,
                       RngStream::Label::Topology, RngStream::Label::Jitter}) {
      RngStream stream(seed, label, 3);
      RefGen ref(seed, static_cast<std::uint64_t>(label), 3);
      for (int i = 0; i < 64; ++i) {
        CHECK(stream.next_u64() == ref.next());
      }
    }
  }
}

TEST_CASE("golden values pin the sequence against drift") {
  // Frozen from the documented algorithm; fails if the seeding or the
  // generator ever changes.
  RngStream stream(1, RngStream::Label::Mobility, 0);
  CHECK(stream.next_u64() == 0xfc3f3a4069895ea4ull);
  CHECK(stream.next_u64() == 0x516c5862f6bd1cdbull);
  CHECK(stream.next_u64() == 0x13dc557829b8ee2bull);
  CHECK(stream.next_u64() == 0xb43b0d61fa9d2e80ull);
  RngStream jitter(42, RngStream::Label::Jitter, 3);
  CHECK(jitter.next_u64() == 0xe173008db2d3f10aull);
}

TEST_CASE("same seed and stream id reproduce the sequence") {
  RngStream a(7, RngStream::Label::Traffic, 5);
  RngStream b(7, RngStream::Label::Traffic, 5);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("labels and substreams decorrelate") {
  RngStream a(7, RngStream::Label::Traffic, 0);
  RngStream b(7, RngStream::Label::Mobility, 0);
  RngStream c(7, RngStream::Label::Traffic, 1);
  int same_ab = 0;
  int same_ac = 0;
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next_u64();
    if (x == b.next_u64()) ++same_ab;
    if (x == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("uniform draws stay inside their ranges") {
  RngStream r(3, RngStream::Label::Jitter, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = r.uniform(3.0, 30.0);
    CHECK(v >= 3.0);
    CHECK(v < 30.0);
    const auto k = r.uniform_u64(7);
    CHECK(k < 7);
  }
  CHECK(r.uniform(5.0, 5.0) == 5.0);
  CHECK(r.uniform_u64(1) == 0);
}
