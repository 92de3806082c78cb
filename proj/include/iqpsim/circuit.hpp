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

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "iqpsim/angle.hpp"
#include "iqpsim/bitstring.hpp"
#include "iqpsim/errors.hpp"

namespace iqpsim {

/// One commuting gate e^{i*theta*X[z]}: the support string z selects the
/// qubits the X tensor acts on.
struct IqpGate {
    Angle theta;
    BitString support;
};

/// A circuit of mutually commuting X-diagonal gates on q qubits, applied to
/// |x>|0...0> and measured in the computational basis. The first `inputs`
/// qubits carry the classical input.
class IqpCircuit {
   public:
    IqpCircuit(std::size_t qubits, std::size_t inputs) : qubits_(qubits), inputs_(inputs) {
        if (qubits == 0) {
            throw std::invalid_argument("circuit needs at least one qubit");
        }
        if (inputs == 0 || inputs > qubits) {
            throw std::invalid_argument("input length must satisfy 1 <= n <= q");
        }
    }

    void add_gate(Angle theta, BitString support) {
        if (support.size() != qubits_) {
            throw std::invalid_argument("gate support length must equal the qubit count");
        }
        if (!support.any()) {
            throw std::invalid_argument("gate support must select at least one qubit");
        }
        gates_.push_back(IqpGate{theta, std::move(support)});
    }

    std::size_t qubit_count() const noexcept {
        return qubits_;
    }
    std::size_t input_count() const noexcept {
        return inputs_;
    }
    const std::vector<IqpGate> &gates() const noexcept {
        return gates_;
    }

   private:
    std::size_t qubits_;
    std::size_t inputs_;
    std::vector<IqpGate> gates_;
};

/// x-bar: the input padded with q-n zeros.
inline BitString embed_input(const IqpCircuit &circuit, const BitString &x) {
    if (x.size() != circuit.input_count()) {
        throw std::invalid_argument("input length does not match the circuit's input count");
    }
    BitString out(circuit.qubit_count());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out.set_bit(j, x.bit(j));
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

}  // namespace detail

/// Circuit file format, one declaration per line, '#' starts a comment:
///   qubits <q>
///   inputs <n>
///   gate <angle> <support>
/// where <angle> is a decimal or "pi*<p>/<q>" and <support> is q characters
/// of 0/1 with bit 1 leftmost. "qubits" and "inputs" must precede any gate.
inline IqpCircuit parse_circuit(std::string_view text, const std::string &source = "<string>") {
    std::size_t qubits = 0;
    std::size_t inputs = 0;
    bool have_qubits = false, have_inputs = false;
    std::vector<IqpGate> pending;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    std::vector<std::pair<Angle, std::string>> gate_tokens;
    std::vector<std::size_t> gate_lines;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = detail::trim(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = detail::trim(line.substr(0, hash));
        }
        if (line.empty()) {
            continue;
        }
        auto tokens = detail::split_ws(line);
        const std::string &kind = tokens[0];
        try {
            if (kind == "qubits") {
                if (tokens.size() != 2) {
                    throw std::invalid_argument("expected: qubits <q>");
                }
                qubits = std::stoul(tokens[1]);
                if (qubits == 0) {
                    throw std::invalid_argument("qubit count must be positive");
                }
                have_qubits = true;
            } else if (kind == "inputs") {
                if (tokens.size() != 2) {
                    throw std::invalid_argument("expected: inputs <n>");
                }
                inputs = std::stoul(tokens[1]);
                have_inputs = true;
            } else if (kind == "gate") {
                if (!have_qubits || !have_inputs) {
                    throw std::invalid_argument("gate declared before qubits/inputs");
                }
                if (tokens.size() != 3) {
                    throw std::invalid_argument("expected: gate <angle> <support>");
                }
                Angle theta = Angle::parse(tokens[1]);
                gate_tokens.emplace_back(theta, tokens[2]);
                gate_lines.push_back(lineno);
            } else {
                throw std::invalid_argument("unknown declaration '" + kind + "'");
            }
        } catch (const std::exception &e) {
            throw parse_error(source, lineno, e.what());
        }
    }
    if (!have_qubits || !have_inputs) {
        throw parse_error(source, lineno, "missing qubits/inputs declaration");
    }
    if (inputs == 0 || inputs > qubits) {
        throw parse_error(source, lineno, "input length must satisfy 1 <= n <= q");
    }

    IqpCircuit circuit(qubits, inputs);
    for (std::size_t i = 0; i < gate_tokens.size(); ++i) {
        try {
            BitString support = BitString::from_string(gate_tokens[i].second);
            circuit.add_gate(gate_tokens[i].first, std::move(support));
        } catch (const std::exception &e) {
            throw parse_error(source, gate_lines[i], e.what());
        }
    }
    return circuit;
}

inline std::string serialize_circuit(const IqpCircuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.qubit_count() << "\n";
    out << "inputs " << circuit.input_count() << "\n";
    for (const IqpGate &g : circuit.gates()) {
        out << "gate " << g.theta.str() << " " << g.support.str() << "\n";
    }
    return out.str();
}

inline IqpCircuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error(path, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str(), path);
}

inline void save_circuit(const IqpCircuit &circuit, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw parse_error(path, 0, "cannot open file for writing");
    }
    out << serialize_circuit(circuit);
}

}  // namespace iqpsim
