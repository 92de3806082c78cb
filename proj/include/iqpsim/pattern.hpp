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
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iqpsim/angle.hpp"
#include "iqpsim/bitstring.hpp"
#include "iqpsim/circuit.hpp"
#include "iqpsim/distribution.hpp"
#include "iqpsim/errors.hpp"
#include "iqpsim/gf2.hpp"
#include "iqpsim/statevector.hpp"

// Non-adaptive graph-state measurement patterns for X-diagonal circuits.
//
// Every node starts in |+>, CZ gates act along the edges, and each node is
// measured once in a basis fixed at compile time: either Pauli-X or the
// rotated observable U_X(-theta) Z U_X(theta) with U_X(theta) = e^{i theta X}.
// A rotated ancilla attached to the support of a gate implements that gate
// up to a Z[support] byproduct on its outcome, so corrections reduce to XOR
// rows over the raw outcomes.

namespace iqpsim {

inline constexpr std::size_t kPatternSimMaxNodes = 14;

struct NodeBasis {
    bool is_x = true;
    Angle theta;  // meaningful when !is_x

    static NodeBasis pauli_x() {
        return NodeBasis{true, Angle::pi_fraction(2, 1)};
    }
    static NodeBasis rotated(Angle theta) {
        return NodeBasis{false, theta};
    }
};

class MeasurementPattern {
   public:
    MeasurementPattern(std::size_t total_nodes, std::size_t registers, std::vector<std::pair<std::size_t, std::size_t>> edges,
                       std::vector<NodeBasis> basis, BitMatrix correction)
        : total_nodes_(total_nodes),
          registers_(registers),
          edges_(std::move(edges)),
          basis_(std::move(basis)),
          correction_(std::move(correction)) {
        if (registers_ == 0 || registers_ > total_nodes_) {
            throw std::invalid_argument("register count must satisfy 1 <= q <= nodes");
        }
        if (basis_.size() != total_nodes_) {
            throw std::invalid_argument("pattern needs one basis per node");
        }
        if (correction_.rows() != registers_ || correction_.cols() != total_nodes_) {
            throw std::invalid_argument("correction matrix must be registers x nodes");
        }
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (auto &e : edges_) {
            if (e.first > e.second) {
                std::swap(e.first, e.second);
            }
            if (e.first == e.second || e.second >= total_nodes_) {
                throw std::invalid_argument("edge endpoints must be distinct in-range nodes");
            }
            if (!seen.insert(e).second) {
                throw std::invalid_argument("duplicate edge");
            }
        }
        std::sort(edges_.begin(), edges_.end());
    }

    std::size_t total_nodes() const noexcept {
        return total_nodes_;
    }
    std::size_t registers() const noexcept {
        return registers_;
    }
    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const noexcept {
        return edges_;
    }
    const std::vector<NodeBasis> &basis() const noexcept {
        return basis_;
    }
    const BitMatrix &correction() const noexcept {
        return correction_;
    }

    /// Every basis is fixed at construction; there is no field that could
    /// condition a basis on an outcome.
    bool is_non_adaptive() const noexcept {
        return true;
    }

   private:
    std::size_t total_nodes_;
    std::size_t registers_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<NodeBasis> basis_;
    BitMatrix correction_;
};

/// One rotated ancilla per gate, adjacent to the gate's support; register
/// nodes keep Pauli-X. Correction row j reads r_j plus the outcomes of every
/// ancilla whose gate support covers qubit j. Node order: registers 0..q-1,
/// then ancillas in gate-list order.
inline MeasurementPattern compile_to_pattern(const IqpCircuit &circuit) {
    const std::size_t q = circuit.qubit_count();
    const std::size_t g_count = circuit.gates().size();
    const std::size_t n_nodes = q + g_count;
    if (n_nodes > 64) {
        throw size_limit_error("pattern limited to 64 nodes");
    }
    std::vector<NodeBasis> basis(n_nodes, NodeBasis::pauli_x());
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    BitMatrix correction(q, n_nodes);
    for (std::size_t j = 0; j < q; ++j) {
        correction.set(j, j, true);
    }
    for (std::size_t g = 0; g < g_count; ++g) {
        const IqpGate &gate = circuit.gates()[g];
        basis[q + g] = NodeBasis::rotated(gate.theta);
        for (std::size_t j = 0; j < q; ++j) {
            if (gate.support.bit(j)) {
                edges.emplace_back(j, q + g);
                correction.set(j, q + g, true);
            }
        }
    }
    return MeasurementPattern(n_nodes, q, std::move(edges), std::move(basis), std::move(correction));
}

/// Exact joint distribution over all raw outcomes (r, s): prepare |+>^N,
/// apply CZ along every edge, rotate each rotated node by e^{i theta X}, map
/// each Pauli-X node through a Hadamard, measure everything in Z.
inline OutcomeDistribution pattern_distribution(const MeasurementPattern &pattern) {
    const std::size_t n = pattern.total_nodes();
    if (n > kPatternSimMaxNodes) {
        throw size_limit_error("pattern simulation limited to 14 nodes");
    }
    StateVector state = StateVector::plus_states(n);
    for (const auto &e : pattern.edges()) {
        state = apply_cz(state, e.first, e.second);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!pattern.basis()[v].is_x) {
            BitString support(n);
            support.set_bit(v, true);
            state = apply_x_exponential(state, pattern.basis()[v].theta.value(), support);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (pattern.basis()[v].is_x) {
            state = apply_hadamard(state, v);
        }
    }
    return measure_all_distribution(state);
}

/// Push-forward of a distribution through the affine map w -> M.w ^ offset.
inline OutcomeDistribution pushforward_affine(const OutcomeDistribution &dist, const BitMatrix &matrix,
                                              std::uint64_t offset_index) {
    if (matrix.cols() != dist.bit_count()) {
        throw std::invalid_argument("matrix columns must match the distribution's bit count");
    }
    std::vector<double> probs(std::size_t(1) << matrix.rows(), 0.0);
    for (std::uint64_t w = 0; w < dist.size(); ++w) {
        probs[matrix.apply(w) ^ offset_index] += dist[w];
    }
    return OutcomeDistribution(matrix.rows(), std::move(probs));
}

/// Distribution of the corrected outputs m = C.(r,s) ^ x-bar.
inline OutcomeDistribution corrected_output_distribution(const MeasurementPattern &pattern, const BitString &x) {
    if (x.size() > pattern.registers()) {
        throw std::invalid_argument("input longer than the pattern's register count");
    }
    BitString xbar(pattern.registers());
    for (std::size_t j = 0; j < x.size(); ++j) {
        xbar.set_bit(j, x.bit(j));
    }
    return pushforward_affine(pattern_distribution(pattern), pattern.correction(), xbar.to_index());
}

/// Rewrites a pattern as an X-diagonal circuit on total_nodes qubits whose
/// computational-basis distribution on the all-zeros input equals
/// pattern_distribution.
///
/// Edges between two X nodes become the 3-gate controlled-phase triple
/// D(pi/4, e_u+e_v), D(7pi/4, e_u), D(7pi/4, e_v). A rotated node v with
/// X-basis neighborhood N(v) becomes D(theta_v, 1_{N(v)}) plus
/// D(pi/4, 1_{N(v)} + e_v); for an isolated rotated node the first gate is a
/// global phase and is dropped. Edges between two rotated nodes cannot be
/// produced by compilation and are rejected.
inline IqpCircuit pattern_to_iqp(const MeasurementPattern &pattern) {
    const std::size_t n = pattern.total_nodes();
    IqpCircuit circuit(n, n);
    std::vector<std::vector<std::size_t>> rot_neighbors(n);
    for (const auto &e : pattern.edges()) {
        const bool ux = pattern.basis()[e.first].is_x;
        const bool vx = pattern.basis()[e.second].is_x;
        if (ux && vx) {
            BitString eu(n), ev(n);
            eu.set_bit(e.first, true);
            ev.set_bit(e.second, true);
            circuit.add_gate(Angle::pi_fraction(1, 4), eu ^ ev);
            circuit.add_gate(Angle::pi_fraction(7, 4), eu);
            circuit.add_gate(Angle::pi_fraction(7, 4), ev);
        } else if (!ux && !vx) {
            throw std::invalid_argument("pattern has an edge between two rotated nodes; not expressible");
        } else if (ux) {
            rot_neighbors[e.second].push_back(e.first);
        } else {
            rot_neighbors[e.first].push_back(e.second);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (pattern.basis()[v].is_x) {
            continue;
        }
        BitString hood(n);
        for (std::size_t u : rot_neighbors[v]) {
            hood.set_bit(u, true);
        }
        if (hood.any()) {
            circuit.add_gate(pattern.basis()[v].theta, hood);
        }
        BitString extended = hood;
        extended.set_bit(v, true);
        circuit.add_gate(Angle::pi_fraction(1, 4), extended);
    }
    return circuit;
}

/// Pattern file format (node ids and output indices are 1-based):
///   pattern nodes=<N> registers=<q>
///   basis <node> X | basis <node> rot <angle>
///   edge <u> <v>
///   correct <j> <node> <node> ...
inline std::string serialize_pattern(const MeasurementPattern &pattern) {
    std::ostringstream out;
    out << "pattern nodes=" << pattern.total_nodes() << " registers=" << pattern.registers() << "\n";
    out << "# rot <theta> measures U_X(-theta) Z U_X(theta), U_X(theta) = exp(i*theta*X);\n";
    out << "# outcome s of a rotated node applies the byproduct Z[gate support]^s,\n";
    out << "# absorbed into the correct rows. X nodes are measured in the Pauli-X basis.\n";
    for (std::size_t v = 0; v < pattern.total_nodes(); ++v) {
        const NodeBasis &b = pattern.basis()[v];
        if (b.is_x) {
            out << "basis " << (v + 1) << " X\n";
        } else {
            out << "basis " << (v + 1) << " rot " << b.theta.str() << "\n";
        }
    }
    for (const auto &e : pattern.edges()) {
        out << "edge " << (e.first + 1) << " " << (e.second + 1) << "\n";
    }
    for (std::size_t j = 0; j < pattern.registers(); ++j) {
        out << "correct " << (j + 1);
        for (std::size_t c = 0; c < pattern.total_nodes(); ++c) {
            if (pattern.correction().get(j, c)) {
                out << " " << (c + 1);
            }
        }
        out << "\n";
    }
    return out.str();
}

inline MeasurementPattern parse_pattern(std::string_view text, const std::string &source = "<string>") {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    std::size_t nodes = 0, registers = 0;
    bool have_header = false;
    std::vector<std::optional<NodeBasis>> basis;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<bool> row_seen;
    std::optional<BitMatrix> correction;

    auto node_id = [&](const std::string &tok, std::size_t line) {
        std::size_t v;
        try {
            v = std::stoul(tok);
        } catch (const std::exception &) {
            throw parse_error(source, line, "malformed node id '" + tok + "'");
        }
        if (v == 0 || v > nodes) {
            throw parse_error(source, line, "node id out of range: " + tok);
        }
        return v - 1;
    };

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
        if (!have_header) {
            if (kind != "pattern" || tokens.size() != 3 || tokens[1].rfind("nodes=", 0) != 0 ||
                tokens[2].rfind("registers=", 0) != 0) {
                throw parse_error(source, lineno, "expected header 'pattern nodes=<N> registers=<q>'");
            }
            try {
                nodes = std::stoul(tokens[1].substr(6));
                registers = std::stoul(tokens[2].substr(10));
            } catch (const std::exception &) {
                throw parse_error(source, lineno, "malformed pattern header");
            }
            if (nodes == 0 || nodes > 64 || registers == 0 || registers > nodes) {
                throw parse_error(source, lineno, "pattern header out of range");
            }
            basis.assign(nodes, std::nullopt);
            row_seen.assign(registers, false);
            correction.emplace(registers, nodes);
            have_header = true;
            continue;
        }
        if (kind == "basis") {
            if (tokens.size() < 3) {
                throw parse_error(source, lineno, "expected 'basis <node> X' or 'basis <node> rot <angle>'");
            }
            std::size_t v = node_id(tokens[1], lineno);
            if (basis[v].has_value()) {
                throw parse_error(source, lineno, "duplicate basis for node " + tokens[1]);
            }
            if (tokens[2] == "X" && tokens.size() == 3) {
                basis[v] = NodeBasis::pauli_x();
            } else if (tokens[2] == "rot" && tokens.size() == 4) {
                try {
                    basis[v] = NodeBasis::rotated(Angle::parse(tokens[3]));
                } catch (const std::exception &e) {
                    throw parse_error(source, lineno, e.what());
                }
            } else {
                throw parse_error(source, lineno, "malformed basis declaration");
            }
        } else if (kind == "edge") {
            if (tokens.size() != 3) {
                throw parse_error(source, lineno, "expected 'edge <u> <v>'");
            }
            std::size_t u = node_id(tokens[1], lineno);
            std::size_t v = node_id(tokens[2], lineno);
            if (u == v) {
                throw parse_error(source, lineno, "self-loop edge");
            }
            edges.emplace_back(u, v);
        } else if (kind == "correct") {
            if (tokens.size() < 2) {
                throw parse_error(source, lineno, "expected 'correct <j> <nodes...>'");
            }
            std::size_t j;
            try {
                j = std::stoul(tokens[1]);
            } catch (const std::exception &) {
                throw parse_error(source, lineno, "malformed output index");
            }
            if (j == 0 || j > registers) {
                throw parse_error(source, lineno, "output index out of range");
            }
            if (row_seen[j - 1]) {
                throw parse_error(source, lineno, "duplicate correct row");
            }
            row_seen[j - 1] = true;
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                correction->set(j - 1, node_id(tokens[t], lineno), true);
            }
        } else {
            throw parse_error(source, lineno, "unknown declaration '" + kind + "'");
        }
    }
    if (!have_header) {
        throw parse_error(source, lineno, "missing 'pattern' header");
    }
    std::vector<NodeBasis> resolved;
    resolved.reserve(nodes);
    for (std::size_t v = 0; v < nodes; ++v) {
        if (!basis[v].has_value()) {
            throw parse_error(source, lineno, "missing basis for node " + std::to_string(v + 1));
        }
        resolved.push_back(*basis[v]);
    }
    for (std::size_t j = 0; j < registers; ++j) {
        if (!row_seen[j]) {
            throw parse_error(source, lineno, "missing correct row for output " + std::to_string(j + 1));
        }
    }
    try {
        return MeasurementPattern(nodes, registers, std::move(edges), std::move(resolved), std::move(*correction));
    } catch (const std::exception &e) {
        throw parse_error(source, lineno, e.what());
    }
}

inline MeasurementPattern load_pattern(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error(path, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str(), path);
}

inline void save_pattern(const MeasurementPattern &pattern, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw parse_error(path, 0, "cannot open file for writing");
    }
    out << serialize_pattern(pattern);
}

}  // namespace iqpsim
