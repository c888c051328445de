// Copyright 2026 The BendForge Authors.
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

#include <cstddef>
#include <cstdint>
#include <span>

namespace bendforge {

/// splitmix64 finalizer applied to x + golden gamma. Bijective.
std::uint64_t splitmix64(std::uint64_t x);

/// splitmix64(master ^ index).
std::uint64_t derive_part_seed(std::uint64_t master, std::uint64_t index);

/// PCG32 (XSH-RR, 64-bit state). The seed is expanded with splitmix64 into the
/// initial state and stream increment. Every draw below is defined on top of
/// next_u32 so the sequence is identical on all platforms; the standard
/// library distributions are deliberately not used.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// 53-bit uniform in [0, 1).
  double uniform01();
  /// Uniform in [lo, hi]; returns lo when the range is empty.
  double uniform(double lo, double hi);
  bool bernoulli(double p);
  /// Uniform integer in [0, n), unbiased (rejection).
  std::size_t index(std::size_t n);
  /// Index with probability proportional to weights (all >= 0, sum > 0).
  std::size_t weighted(std::span<const double> weights);

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace bendforge
