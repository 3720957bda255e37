// Copyright 2026 The locdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCDISC_CORE_RNG_HPP
#define LOCDISC_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace locdisc {

// splitmix64 mixing step; used both as the stream generator state update and
// to derive independent per-trial seeds from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seeded stream. All transforms (uniform, normal) are spelled
// out here rather than taken from <random> distributions, so sequences are
// identical across standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + uniform01() * (b - a); }

  // Box-Muller, one variate per call (no cached second value, so the stream
  // position is a pure function of the call count).
  double normal(double mean, double stddev) {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

// Per-trial stream: hash-combine (seed, trial index) so results do not depend
// on the order trials are executed in.
inline RngStream derive_stream(std::uint64_t seed, std::uint64_t index) {
  return RngStream(splitmix64(seed ^ splitmix64(index + 0x51ed270b05f8dbadULL)));
}

}  // namespace locdisc

#endif  // LOCDISC_CORE_RNG_HPP
