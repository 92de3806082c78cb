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

// Dense statevector oracle. Exists for correctness, not speed: plain index
// arithmetic, one amplitude pair at a time, deliberately unlike the fast
// path's butterfly structure so the two cannot share a failure mode.

namespace iqpsim {

inline constexpr std::size_t kOracleMaxQubits = 14;

class StateVector {
   public:
    static StateVector computational_basis(std::size_t qubits, std::uint64_t index) {
        StateVector s(qubits);
        s.amps_.at(index) = 1.0;
        return s;
    }

    static StateVector plus_states(std::size_t qubits) {
        StateVector s(qubits);
        double a = std::pow(2.0, -0.5 * static_cast<double>(qubits));
        for (auto &v : s.amps_) {
            v = a;
        }
        return s;
    }

    std::size_t qubit_count() const noexcept {
        return qubits_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::complex<double> amp(std::uint64_t index) const {
        return amps_.at(index);
    }
    const std::vector<std::complex<double>> &amps() const noexcept {
        return amps_;
    }
    std::vector<std::complex<double>> &mutable_amps() noexcept {
        return amps_;
    }

    double norm() const {
        double n = 0.0;
        for (const auto &a : amps_) {
            n += std::norm(a);
        }
        return std::sqrt(n);
    }

   private:
    explicit StateVector(std::size_t qubits) : qubits_(qubits), amps_() {
        if (qubits == 0 || qubits > kOracleMaxQubits) {
            throw size_limit_error("oracle statevector limited to 14 qubits");
        }
        amps_.assign(std::size_t(1) << qubits, 0.0);
    }

    std::size_t qubits_;
    std::vector<std::complex<double>> amps_;
};

namespace detail {

// Mask with bit j of the string at index position (k-1-j).
inline std::uint64_t support_mask(const BitString &support) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
        m = (m << 1) | (support.bit(j) ? 1u : 0u);
    }
    return m;
}

inline std::uint64_t index_bit(std::size_t qubits, std::size_t j) {
    return std::uint64_t(1) << (qubits - 1 - j);
}

}  // namespace detail

/// e^{i*theta*X[z]}: pairs (w, w^z) combine as
/// new[w] = cos(theta)*old[w] + i*sin(theta)*old[w^z].
inline StateVector apply_x_exponential(const StateVector &state, double theta, const BitString &support) {
    if (support.size() != state.qubit_count()) {
        throw std::invalid_argument("support length must equal the qubit count");
    }
    std::uint64_t z = detail::support_mask(support);
    StateVector out = state;
    auto &amps = out.mutable_amps();
    const std::complex<double> ic{0.0, std::sin(theta)};
    const double c = std::cos(theta);
    if (z == 0) {
        const std::complex<double> phase{c, std::sin(theta)};
        for (auto &a : amps) {
            a *= phase;
        }
        return out;
    }
    for (std::uint64_t w = 0; w < amps.size(); ++w) {
        std::uint64_t wz = w ^ z;
        if (w < wz) {
            std::complex<double> a = amps[w];
            std::complex<double> b = amps[wz];
            amps[w] = c * a + ic * b;
            amps[wz] = c * b + ic * a;
        }
    }
    return out;
}

/// e^{i*theta*Z[z]}: new[w] = e^{i*theta*(-1)^parity(w & z)} * old[w].
inline StateVector apply_z_exponential(const StateVector &state, double theta, const BitString &support) {
    if (support.size() != state.qubit_count()) {
        throw std::invalid_argument("support length must equal the qubit count");
    }
    std::uint64_t z = detail::support_mask(support);
    StateVector out = state;
    auto &amps = out.mutable_amps();
    const std::complex<double> plus{std::cos(theta), std::sin(theta)};
    const std::complex<double> minus{std::cos(theta), -std::sin(theta)};
    for (std::uint64_t w = 0; w < amps.size(); ++w) {
        amps[w] *= parity64(w & z) ? minus : plus;
    }
    return out;
}

inline StateVector apply_cz(const StateVector &state, std::size_t i, std::size_t j) {
    if (i >= state.qubit_count() || j >= state.qubit_count() || i == j) {
        throw std::invalid_argument("controlled-phase needs two distinct in-range qubits");
    }
    std::uint64_t bi = detail::index_bit(state.qubit_count(), i);
    std::uint64_t bj = detail::index_bit(state.qubit_count(), j);
    StateVector out = state;
    auto &amps = out.mutable_amps();
    for (std::uint64_t w = 0; w < amps.size(); ++w) {
        if ((w & bi) && (w & bj)) {
            amps[w] = -amps[w];
        }
    }
    return out;
}

inline StateVector apply_hadamard(const StateVector &state, std::size_t i) {
    if (i >= state.qubit_count()) {
        throw std::invalid_argument("qubit index out of range");
    }
    std::uint64_t bi = detail::index_bit(state.qubit_count(), i);
    const double r = std::sqrt(0.5);
    StateVector out = state;
    auto &amps = out.mutable_amps();
    for (std::uint64_t w = 0; w < amps.size(); ++w) {
        if ((w & bi) == 0) {
            std::complex<double> a = amps[w];
            std::complex<double> b = amps[w | bi];
            amps[w] = r * (a + b);
            amps[w | bi] = r * (a - b);
        }
    }
    return out;
}

inline OutcomeDistribution measure_all_distribution(const StateVector &state) {
    std::vector<double> probs(state.size());
    for (std::uint64_t w = 0; w < state.size(); ++w) {
        probs[w] = std::norm(state.amp(w));
    }
    return OutcomeDistribution(state.qubit_count(), std::move(probs));
}

/// Ground-truth simulation: prepare |x-bar>, apply the gate list in order,
/// measure every qubit.
inline OutcomeDistribution simulate_iqp_dense(const IqpCircuit &circuit, const BitString &x) {
    if (circuit.qubit_count() > kOracleMaxQubits) {
        throw size_limit_error("dense oracle limited to 14 qubits");
    }
    BitString xbar = embed_input(circuit, x);
    StateVector state = StateVector::computational_basis(circuit.qubit_count(), xbar.to_index());
    for (const IqpGate &g : circuit.gates()) {
        state = apply_x_exponential(state, g.theta.value(), g.support);
    }
    return measure_all_distribution(state);
}

}  // namespace iqpsim
