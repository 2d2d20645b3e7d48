// Copyright 2026 The aqsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQSIM_RNG_HPP
#define AQSIM_RNG_HPP

#include <array>
#include <cstdint>

namespace aqsim {

/// Philox 4x32 with 10 rounds (Salmon et al., SC'11). A pure function of
/// (key, counter), which is what makes parallel substreams reproducible: any
/// (realization, draw) pair addresses its random word directly.
struct Philox4x32 {
  static std::array<std::uint32_t, 4> block(
      const std::array<std::uint32_t, 2>& key,
      const std::array<std::uint32_t, 4>& counter);
};

/// Deterministic stream of uniforms/normals keyed by a 64-bit seed and
/// addressed by (realization, index). Gaussians come from the inverse normal
/// CDF applied to a strictly-interior uniform.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform in the open interval (0, 1); symmetric about 1/2.
  double uniform(std::uint64_t realization, std::uint64_t index) const;

  /// Standard normal draw at (realization, index).
  double normal(std::uint64_t realization, std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

}  // namespace aqsim

#endif  // AQSIM_RNG_HPP
