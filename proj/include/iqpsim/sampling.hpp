// Copyright 2026 The iqpsim authors
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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "iqpsim/distribution.hpp"

namespace iqpsim {

/// Identifier of the sampling algorithm, emitted in output metadata so runs
/// are reproducible across platforms: mt19937_64 (bit-exact per the C++
/// standard), top 53 bits mapped to [0,1), inverse CDF over the exact table.
inline constexpr std::string_view kSamplerAlgorithmId = "mt19937_64-u53-invcdf";

class SeededSampler {
   public:
    explicit SeededSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double next_u53() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

   private:
    std::mt19937_64 rng_;
};

/// Inverse-CDF sampler over a fixed outcome table.
class DiscreteSampler {
   public:
    explicit DiscreteSampler(const OutcomeDistribution &dist) : prefix_(dist.size()) {
        double acc = 0.0;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            acc += dist[i];
            prefix_[i] = acc;
        }
        prefix_.back() = 1.0;
    }

    std::uint64_t draw(SeededSampler &rng) const {
        double u = rng.next_u53();
        auto it = std::upper_bound(prefix_.begin(), prefix_.end(), u);
        if (it == prefix_.end()) {
            --it;
        }
        return static_cast<std::uint64_t>(it - prefix_.begin());
    }

   private:
    std::vector<double> prefix_;
};

}  // namespace iqpsim
