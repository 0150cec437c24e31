// trialkit/rng.h

// Copyright 2026  The trialkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIALKIT_RNG_H_
#define TRIALKIT_RNG_H_

#include <cstdint>
#include <limits>

namespace trialkit {

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64 (Steele, Lea & Flood).  The k-th output is Mix64(s0 + k*gamma)
/// with gamma = 0x9E3779B97F4A7C15, so the stream is a pure function of the
/// starting state and identical on every platform.  Satisfies
/// UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr result_type operator()() {
    state_ += kGamma;
    return Mix64(state_);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double NextUnit() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }
  /// Uniform on (0, 1]; safe to pass to log().
  double NextUnitOpenLow() {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }
  /// Uniform integer in [0, bound); bound > 0.  Lemire's multiply-shift with
  /// rejection, so the result is exact and bias-free.
  std::uint64_t NextBelow(std::uint64_t bound);

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Independent stream keyed by (seed, stream_id):
///   state = Mix64(seed) ^ Mix64((stream_id + 1) * gamma).
/// Streams for different ids never depend on how many draws another stream
/// made, so parallel work keyed by id is order-independent.
SplitMix64 Substream(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace trialkit

#endif  // TRIALKIT_RNG_H_
