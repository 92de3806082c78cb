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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "iqpsim/bitstring.hpp"
#include "iqpsim/distribution.hpp"
#include "iqpsim/errors.hpp"
#include "iqpsim/gf2.hpp"
#include "iqpsim/pattern.hpp"
#include "iqpsim/sampling.hpp"

// Measurement-based classical computation: the resource is one sample from a
// multi-bit distribution, and side-processing is restricted to affine maps
// over GF(2) (XOR and NOT only). Taking the joint measurement table of a
// fixed-basis pattern is the dephasing step: the table is the resource.

namespace iqpsim {

/// Immutable multi-bit probability table used as the one-shot resource.
class ResourceDistribution {
   public:
    ResourceDistribution(OutcomeDistribution table, std::string provenance)
        : table_(std::move(table)), provenance_(std::move(provenance)) {}

    std::size_t bits() const noexcept {
        return table_.bit_count();
    }
    const OutcomeDistribution &table() const noexcept {
        return table_;
    }
    const std::string &provenance() const noexcept {
        return provenance_;
    }

   private:
    OutcomeDistribution table_;
    std::string provenance_;
};

/// Affine map over GF(2): output = matrix . bits ^ offset. The type can
/// express nothing else; XOR rows and a NOT mask are the whole state.
struct LinearProcessor {
    BitMatrix matrix;
    BitString offset;

    LinearProcessor(BitMatrix m, BitString c) : matrix(std::move(m)), offset(std::move(c)) {
        if (matrix.rows() != offset.size()) {
            throw std::invalid_argument("offset length must equal the matrix row count");
        }
    }

    BitString apply(const BitString &bits) const {
        return matrix.apply(bits) ^ offset;
    }

    std::uint64_t apply_index(std::uint64_t bits) const {
        return matrix.apply(bits) ^ offset.to_index();
    }
};

/// Resource + processor, with a poll counter tracking how many one-shot
/// samples have been consumed. The counter is advisory (it reports, it does
/// not destroy the table) so exact-equivalence tests can reuse the resource.
class MbccInstance {
   public:
    MbccInstance(ResourceDistribution resource, LinearProcessor processor)
        : resource_(std::move(resource)), processor_(std::move(processor)) {
        if (processor_.matrix.cols() != resource_.bits()) {
            throw std::invalid_argument("processor width must match the resource bit count");
        }
    }

    MbccInstance(MbccInstance &&other) noexcept
        : resource_(std::move(other.resource_)),
          processor_(std::move(other.processor_)),
          polls_(other.polls_.load(std::memory_order_relaxed)) {}

    const ResourceDistribution &resource() const noexcept {
        return resource_;
    }
    const LinearProcessor &processor() const noexcept {
        return processor_;
    }
    std::uint64_t poll_count() const noexcept {
        return polls_.load(std::memory_order_relaxed);
    }
    std::uint64_t record_poll() noexcept {
        return polls_.fetch_add(1, std::memory_order_relaxed) + 1;
    }

   private:
    ResourceDistribution resource_;
    LinearProcessor processor_;
    std::atomic<std::uint64_t> polls_{0};
};

/// The dephased joint outcome table of the pattern, wrapped with provenance.
inline ResourceDistribution resource_from_pattern(const MeasurementPattern &pattern) {
    std::ostringstream tag;
    tag << "pattern nodes=" << pattern.total_nodes() << " registers=" << pattern.registers();
    return ResourceDistribution(pattern_distribution(pattern), tag.str());
}

/// A = the pattern's correction matrix, c = x-bar.
inline LinearProcessor processor_from_pattern(const MeasurementPattern &pattern, const BitString &x) {
    if (x.size() > pattern.registers()) {
        throw std::invalid_argument("input longer than the pattern's register count");
    }
    BitString xbar(pattern.registers());
    for (std::size_t j = 0; j < x.size(); ++j) {
        xbar.set_bit(j, x.bit(j));
    }
    return LinearProcessor(pattern.correction(), std::move(xbar));
}

/// Polls a single sample from the resource and applies the affine map.
inline BitString run_once(MbccInstance &instance, std::uint64_t seed) {
    DiscreteSampler table(instance.resource().table());
    SeededSampler rng(seed);
    std::uint64_t raw = table.draw(rng);
    instance.record_poll();
    return BitString::from_index(instance.processor().apply_index(raw), instance.processor().matrix.rows());
}

/// Exact push-forward of the resource through the affine map.
inline OutcomeDistribution exact_mbcc_distribution(const MbccInstance &instance) {
    return pushforward_affine(instance.resource().table(), instance.processor().matrix,
                              instance.processor().offset.to_index());
}

/// Manifest format, one declaration per line, '#' starts a comment:
///   resource <path>        relative paths resolve against the manifest
///   matrix <0/1 row>       one line per output row
///   offset <bitstring>
inline MbccInstance load_mbcc_manifest(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error(path, 0, "cannot open file");
    }
    std::string raw;
    std::size_t lineno = 0;
    std::string resource_path;
    std::vector<std::string> rows;
    std::string offset_text;
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
        if (tokens[0] == "resource" && tokens.size() == 2) {
            resource_path = tokens[1];
        } else if (tokens[0] == "matrix" && tokens.size() == 2) {
            rows.push_back(tokens[1]);
        } else if (tokens[0] == "offset" && tokens.size() == 2) {
            offset_text = tokens[1];
        } else {
            throw parse_error(path, lineno, "expected 'resource <path>', 'matrix <row>' or 'offset <bits>'");
        }
    }
    if (resource_path.empty() || rows.empty() || offset_text.empty()) {
        throw parse_error(path, lineno, "manifest needs resource, matrix rows and offset");
    }
    std::filesystem::path rp(resource_path);
    if (rp.is_relative()) {
        rp = std::filesystem::path(path).parent_path() / rp;
    }
    OutcomeDistribution table = load_distribution(rp.string());
    BitMatrix matrix(rows.size(), table.bit_count());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != table.bit_count()) {
            throw parse_error(path, 0, "matrix row width does not match the resource bit count");
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw parse_error(path, 0, "matrix rows may contain only 0 and 1");
            }
            matrix.set(r, c, ch == '1');
        }
    }
    BitString offset = BitString::from_string(offset_text);
    if (offset.size() != rows.size()) {
        throw parse_error(path, 0, "offset length must equal the matrix row count");
    }
    return MbccInstance(ResourceDistribution(std::move(table), "external"),
                        LinearProcessor(std::move(matrix), std::move(offset)));
}

inline std::string serialize_mbcc_manifest(const LinearProcessor &processor, const std::string &resource_path) {
    std::ostringstream out;
    out << "resource " << resource_path << "\n";
    for (std::size_t r = 0; r < processor.matrix.rows(); ++r) {
        out << "matrix " << processor.matrix.row_str(r) << "\n";
    }
    out << "offset " << processor.offset.str() << "\n";
    return out.str();
}

}  // namespace iqpsim
