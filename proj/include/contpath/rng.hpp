// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_RNG_HPP
#define CONTPATH_RNG_HPP

#include <cstdint>

namespace contpath {

// Counter-based random stream: every draw is a pure function of
// (seed, stream_id, counter), so runs replay bit-identically regardless of
// thread scheduling, and distinct stream_ids give statistically independent
// streams. The generator is the splitmix64 finalizer applied to
// key + counter * golden-gamma.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t next_u64() noexcept;

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() noexcept;

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept;

  // Standard normal via Box-Muller; draws two uniforms per pair and caches
  // the second variate.
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace contpath

#endif  // CONTPATH_RNG_HPP
