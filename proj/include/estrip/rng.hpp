#pragma once

#include <cstdint>

namespace estrip {

// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based stream: the k-th draw depends only on (seed, stream, k), so sample i of
// an ensemble is the same whatever thread computes it and in whatever order.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ull))) {}

  constexpr std::uint64_t at(std::uint64_t counter) const { return mix64(key_ ^ mix64(counter)); }
  constexpr std::uint64_t next() { return at(counter_++); }
  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace estrip
