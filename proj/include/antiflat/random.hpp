// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>

namespace antiflat {

/// Splittable counter-seeded random stream (xoshiro256++ core, splitmix64
/// seeding). Identical (seed, stream) pairs reproduce identical draw
/// sequences on every platform; child streams obtained via split() are
/// statistically independent of the parent and of each other.
///
/// Streams are not thread-safe: parallel callers split one stream per worker.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01();

  /// Standard normal via Box-Muller (second value cached).
  double gaussian();

  /// Unbiased uniform integer in [0, bound).
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Independent child stream; the parent state is not advanced.
  RandomStream split(std::uint64_t child) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace antiflat
