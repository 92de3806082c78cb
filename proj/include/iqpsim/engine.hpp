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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "iqpsim/bitstring.hpp"
#include "iqpsim/circuit.hpp"
#include "iqpsim/distribution.hpp"
#include "iqpsim/errors.hpp"
#include "iqpsim/sampling.hpp"
#include "iqpsim/statevector.hpp"

// Fast exact path. An X-diagonal circuit is fully described by its phase
// function phi over the X eigenbasis; the zero-input amplitudes are the
// Walsh-Hadamard transform of e^{i*phi}, computed by an in-place butterfly
// in O(q * 2^q). Input dependence is a classical XOR offset on outcomes, so
// only zero-input amplitudes are ever transformed.

namespace iqpsim {

inline constexpr std::size_t kEngineMaxQubits = 26;

/// phases[a] = sum over gates of theta * (-1)^(a . z).
struct PhaseVector {
    std::size_t qubits;
    std::vector<double> phases;
};

/// Zero-input amplitude table: amps[y] = <y|U|0...0>.
class AmplitudeVector {
   public:
    AmplitudeVector(std::size_t qubits, std::vector<std::complex<double>> amps)
        : qubits_(qubits), amps_(std::move(amps)) {
        if (amps_.size() != (std::size_t(1) << qubits_)) {
            throw std::invalid_argument("amplitude table must have 2^q entries");
        }
        double n = 0.0;
        for (const auto &a : amps_) {
            n += std::norm(a);
        }
        if (std::abs(n - 1.0) > 1e-12) {
            throw std::invalid_argument("amplitude vector norm deviates from 1 by more than 1e-12");
        }
    }

    std::size_t qubit_count() const noexcept {
        return qubits_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::complex<double> operator[](std::size_t y) const {
        return amps_.at(y);
    }
    const std::vector<std::complex<double>> &amps() const noexcept {
        return amps_;
    }

   private:
    std::size_t qubits_;
    std::vector<std::complex<double>> amps_;
};

inline PhaseVector phase_vector(const IqpCircuit &circuit) {
    const std::size_t q = circuit.qubit_count();
    if (q > kEngineMaxQubits) {
        throw size_limit_error("fast path limited to 26 qubits");
    }
    PhaseVector pv{q, std::vector<double>(std::size_t(1) << q, 0.0)};
    for (const IqpGate &g : circuit.gates()) {
        const std::uint64_t z = detail::support_mask(g.support);
        const double theta = g.theta.value();
        for (std::uint64_t a = 0; a < pv.phases.size(); ++a) {
            pv.phases[a] += parity64(a & z) ? -theta : theta;
        }
    }
    return pv;
}

/// amps[y] = 2^{-q} * sum_a (-1)^(a.y) e^{i phi(a)}, via the radix-2
/// butterfly over the 2^q entries.
inline AmplitudeVector zero_input_amplitudes(const PhaseVector &pv) {
    const std::size_t q = pv.qubits;
    if (q > kEngineMaxQubits) {
        throw size_limit_error("fast path limited to 26 qubits");
    }
    const std::size_t n = std::size_t(1) << q;
    if (pv.phases.size() != n) {
        throw std::invalid_argument("phase vector has wrong length");
    }
    std::vector<std::complex<double>> v(n);
    for (std::size_t a = 0; a < n; ++a) {
        v[a] = std::complex<double>(std::cos(pv.phases[a]), std::sin(pv.phases[a]));
    }
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t block = 0; block < n; block += half << 1) {
            for (std::size_t i = block; i < block + half; ++i) {
                std::complex<double> a = v[i];
                std::complex<double> b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
    const double scale = std::pow(2.0, -static_cast<double>(q));
    for (auto &a : v) {
        a *= scale;
    }
    return AmplitudeVector(q, std::move(v));
}

/// probs[m] = |amps[m ^ x-bar]|^2. Only zero-input amplitudes are computed;
/// the input enters purely as the classical offset.
inline OutcomeDistribution output_distribution(const IqpCircuit &circuit, const BitString &x) {
    AmplitudeVector amps = zero_input_amplitudes(phase_vector(circuit));
    const std::uint64_t xbar = embed_input(circuit, x).to_index();
    std::vector<double> probs(amps.size());
    for (std::uint64_t m = 0; m < amps.size(); ++m) {
        probs[m] = std::norm(amps[m ^ xbar]);
    }
    return OutcomeDistribution(circuit.qubit_count(), std::move(probs));
}

/// `count` independent seeded draws from the exact output table.
inline std::vector<BitString> sample(const IqpCircuit &circuit, const BitString &x, std::uint64_t seed,
                                     std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("sample count must be positive");
    }
    OutcomeDistribution dist = output_distribution(circuit, x);
    DiscreteSampler table(dist);
    SeededSampler rng(seed);
    std::vector<BitString> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(BitString::from_index(table.draw(rng), circuit.qubit_count()));
    }
    return out;
}

}  // namespace iqpsim
