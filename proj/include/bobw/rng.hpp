// Copyright 2026 The bobw-bandits Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace bobw {

/// Seeded random stream.
///
/// The engine is xoshiro256** with its 256-bit state expanded from
/// (seed, stream_id) through SplitMix64:
///
///   key   = splitmix64(seed) ^ (stream_id * 0xD1342543DE82EF95 + 1)
///   state = four successive splitmix64 outputs starting from key
///
/// Every derived quantity (uniform doubles, bounded integers, Gaussians) is
/// computed by fixed algorithms written here rather than std::*_distribution,
/// whose output is implementation-defined. Identical (seed, stream_id) pairs
/// therefore give identical sequences on every conforming platform, up to the
/// correctly-rounded behaviour of std::log/std::sqrt/std::cos in Gaussian draws.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Independent child stream. Depends only on (seed, stream_id, index), never
  /// on how many values this stream has already produced.
  RngStream child(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on {0, ..., n-1}; n must be positive. Lemire's multiply-shift
  /// with rejection, so the result is unbiased.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via the Box-Muller transform; the second value of each
  /// pair is cached.
  double standard_normal();

  double normal(double mean, double stddev) {
    return mean + stddev * standard_normal();
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t& x);

}  // namespace bobw
