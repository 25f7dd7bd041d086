// Copyright 2026 The Volbench Authors
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

/**
 * @file
 * Deterministic, splittable random streams.
 *
 * Every random quantity in the project is drawn from an Rng seeded by a
 * (master_seed, stream_path) pair.  Streams with different paths are
 * statistically independent, so work items can be evaluated in any order or
 * in parallel without changing a single output bit.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace volbench {

/// Identifier string recorded in reports so a run can name its generator.
inline constexpr const char *kRngAlgorithm = "splitmix64-path/xoshiro256**";

/// Addresses one random stream: a master seed plus a path of integers such as
/// {class, width, circuit, layer}.  Identical (master_seed, stream_path)
/// always produces identical output.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> stream_path;

    /// Returns a copy with one more path element appended.
    [[nodiscard]] SeedSpec child(std::uint64_t id) const {
        SeedSpec s = *this;
        s.stream_path.push_back(id);
        return s;
    }
};

/// Collapses a seed path into a 64-bit stream seed.  Fixed mixing function
/// (splitmix64 finalizer applied per path element); changing it invalidates
/// all recorded results.
std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                 std::span<const std::uint64_t> path);

std::uint64_t derive_stream_seed(const SeedSpec &spec);

/// xoshiro256** generator with hand-rolled distributions.  The distributions
/// are implemented here rather than taken from <random> so that sequences are
/// identical across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t stream_seed);
    explicit Rng(const SeedSpec &spec) : Rng(derive_stream_seed(spec)) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, bound); bound must be nonzero.  Unbiased
    /// (rejection sampling).
    std::uint64_t uniform_int(std::uint64_t bound);

    /// Standard normal via Box-Muller.  Draws are paired internally, so a
    /// single call may consume zero or two uniforms.
    double normal();

  private:
    std::uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace volbench
