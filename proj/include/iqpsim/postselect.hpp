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
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iqpsim/bitstring.hpp"
#include "iqpsim/circuit.hpp"
#include "iqpsim/distribution.hpp"
#include "iqpsim/engine.hpp"
#include "iqpsim/errors.hpp"
#include "iqpsim/sampling.hpp"

namespace iqpsim {

/// Condition on fixed values at a subset of outcome positions. Positions are
/// 0-based from the left. Defined only when the event has nonzero
/// probability.
struct PostselectionSpec {
    std::vector<std::size_t> positions;
    BitString required;

    PostselectionSpec(std::vector<std::size_t> pos, BitString req) : positions(std::move(pos)), required(std::move(req)) {
        if (positions.size() != required.size()) {
            throw std::invalid_argument("postselection needs one required bit per position");
        }
        std::set<std::size_t> seen(positions.begin(), positions.end());
        if (seen.size() != positions.size()) {
            throw std::invalid_argument("postselection positions must be distinct");
        }
    }

    void check_in_range(std::size_t bits) const {
        for (std::size_t p : positions) {
            if (p >= bits) {
                throw std::invalid_argument("postselection position out of range");
            }
        }
        if (positions.size() >= bits) {
            throw std::invalid_argument("postselection must leave at least one free bit");
        }
    }

    bool contains(std::size_t position) const {
        return std::find(positions.begin(), positions.end(), position) != positions.end();
    }

    std::string event_str() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (i) {
                out << ",";
            }
            out << (positions[i] + 1) << "=" << (required.bit(i) ? 1 : 0);
        }
        return out.str();
    }
};

struct PostselectResult {
    OutcomeDistribution conditional;  // over the remaining bits, original order
    double event_probability;
};

namespace detail {

/// Keeps the bits outside `positions`, preserving their order.
inline std::uint64_t drop_positions(std::uint64_t index, std::size_t bits, const std::vector<bool> &conditioned) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < bits; ++j) {
        if (!conditioned[j]) {
            out = (out << 1) | ((index >> (bits - 1 - j)) & 1u);
        }
    }
    return out;
}

}  // namespace detail

/// Exact conditional distribution over the non-conditioned bits, plus the
/// probability of the conditioning event.
inline PostselectResult postselect(const OutcomeDistribution &dist, const PostselectionSpec &spec) {
    const std::size_t bits = dist.bit_count();
    spec.check_in_range(bits);
    std::vector<bool> conditioned(bits, false);
    std::uint64_t mask = 0, want = 0;
    for (std::size_t i = 0; i < spec.positions.size(); ++i) {
        conditioned[spec.positions[i]] = true;
        std::uint64_t bit = std::uint64_t(1) << (bits - 1 - spec.positions[i]);
        mask |= bit;
        if (spec.required.bit(i)) {
            want |= bit;
        }
    }
    const std::size_t rem_bits = bits - spec.positions.size();
    std::vector<double> weights(std::size_t(1) << rem_bits, 0.0);
    for (std::uint64_t m = 0; m < dist.size(); ++m) {
        if ((m & mask) == want) {
            weights[detail::drop_positions(m, bits, conditioned)] += dist[m];
        }
    }
    double mass = 0.0;
    for (double w : weights) {
        mass += w;
    }
    if (mass <= 0.0) {
        throw zero_probability_error("postselection event has zero probability: bits {" + spec.event_str() +
                                     "} (1-based)");
    }
    for (double &w : weights) {
        w /= mass;
    }
    return PostselectResult{OutcomeDistribution(rem_bits, std::move(weights)), mass};
}

struct RepetitionResult {
    bool success = false;
    BitString remaining;  // valid when success
    std::uint64_t tries = 0;
};

/// Implements post-selection by repetition: sample the circuit until the
/// conditioning event occurs, give up after max_tries.
inline RepetitionResult postselect_by_repetition(const IqpCircuit &circuit, const BitString &x,
                                                 const PostselectionSpec &spec, std::uint64_t seed,
                                                 std::uint64_t max_tries) {
    if (max_tries == 0) {
        throw std::invalid_argument("max_tries must be positive");
    }
    const std::size_t bits = circuit.qubit_count();
    spec.check_in_range(bits);
    OutcomeDistribution dist = output_distribution(circuit, x);
    DiscreteSampler table(dist);
    SeededSampler rng(seed);
    std::vector<bool> conditioned(bits, false);
    std::uint64_t mask = 0, want = 0;
    for (std::size_t i = 0; i < spec.positions.size(); ++i) {
        conditioned[spec.positions[i]] = true;
        std::uint64_t bit = std::uint64_t(1) << (bits - 1 - spec.positions[i]);
        mask |= bit;
        if (spec.required.bit(i)) {
            want |= bit;
        }
    }
    for (std::uint64_t t = 1; t <= max_tries; ++t) {
        std::uint64_t m = table.draw(rng);
        if ((m & mask) == want) {
            return RepetitionResult{true,
                                    BitString::from_index(detail::drop_positions(m, bits, conditioned),
                                                          bits - spec.positions.size()),
                                    t};
        }
    }
    return RepetitionResult{false, BitString(1), max_tries};
}

}  // namespace iqpsim
