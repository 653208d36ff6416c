#pragma once

#include <cmath>
#include <cstdint>

namespace graphlaw {

// SplitMix64. Chosen over <random> engines+distributions because distribution
// output is implementation-defined and chain reports must be byte-stable for a
// fixed seed across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 bits of mantissa.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on {0,..,m-1}. m is tiny everywhere this is used (vertex pairs),
  // so plain modulo keeps the stream layout simple.
  std::uint64_t below(std::uint64_t m) { return next() % m; }

  // Standard normal via Box-Muller; consumes exactly two draws per value.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 <= 0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace graphlaw
