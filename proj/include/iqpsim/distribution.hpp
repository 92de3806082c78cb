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
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "iqpsim/bitstring.hpp"
#include "iqpsim/errors.hpp"

namespace iqpsim {

inline constexpr std::size_t kMaxDistributionBits = 26;

/// Exact probability table over all 2^k outcomes of k bits, indexed with the
/// leftmost bit most significant. Normalized to 1 within 1e-12; negative
/// rounding residue down to -1e-14 is clipped to zero, anything below that is
/// treated as a logic error.
class OutcomeDistribution {
   public:
    OutcomeDistribution(std::size_t bits, std::vector<double> probs) : bits_(bits), probs_(std::move(probs)) {
        validate_shape();
        double total = 0.0;
        for (double &p : probs_) {
            if (p < 0.0) {
                if (p < -1e-14) {
                    throw std::invalid_argument("probability below the -1e-14 rounding floor");
                }
                p = 0.0;
            }
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw std::invalid_argument("distribution does not sum to 1 within 1e-12");
        }
    }

    /// Builds from nonnegative weights, dividing by their total. Reports the
    /// total through `mass` when requested; throws if the total is zero.
    static OutcomeDistribution renormalized(std::size_t bits, std::vector<double> weights, double *mass = nullptr) {
        double total = 0.0;
        for (double w : weights) {
            if (w < -1e-14) {
                throw std::invalid_argument("negative weight");
            }
            total += std::max(w, 0.0);
        }
        if (mass != nullptr) {
            *mass = total;
        }
        if (total <= 0.0) {
            throw std::invalid_argument("cannot normalize an all-zero weight vector");
        }
        for (double &w : weights) {
            w = std::max(w, 0.0) / total;
        }
        return OutcomeDistribution(bits, std::move(weights));
    }

    static OutcomeDistribution point_mass(std::size_t bits, std::uint64_t index) {
        std::vector<double> p(std::size_t(1) << bits, 0.0);
        p.at(index) = 1.0;
        return OutcomeDistribution(bits, std::move(p));
    }

    std::size_t bit_count() const noexcept {
        return bits_;
    }
    std::size_t size() const noexcept {
        return probs_.size();
    }
    double operator[](std::size_t index) const {
        return probs_.at(index);
    }
    const std::vector<double> &probs() const noexcept {
        return probs_;
    }

   private:
    void validate_shape() const {
        if (bits_ == 0 || bits_ > kMaxDistributionBits) {
            throw size_limit_error("distribution bit count must be in [1, 26]");
        }
        if (probs_.size() != (std::size_t(1) << bits_)) {
            throw std::invalid_argument("probability table must have 2^k entries");
        }
    }

    std::size_t bits_;
    std::vector<double> probs_;
};

/// Half the L1 distance; in [0, 1].
inline double total_variation_distance(const OutcomeDistribution &p, const OutcomeDistribution &r) {
    if (p.bit_count() != r.bit_count()) {
        throw std::invalid_argument("total variation distance requires equal bit counts");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += std::abs(p[i] - r[i]);
    }
    return 0.5 * acc;
}

/// Distribution file format: header "dist k=<bits>", then one line per
/// nonzero outcome, "<bitstring> <probability>", 15 fixed decimals, sorted
/// lexicographically (which is index order here).
inline void write_distribution(std::ostream &out, const OutcomeDistribution &dist) {
    out << "dist k=" << dist.bit_count() << "\n";
    char buf[64];
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] >= 5e-16) {
            std::snprintf(buf, sizeof buf, "%.15f", dist[i]);
            out << BitString::from_index(i, dist.bit_count()).str() << " " << buf << "\n";
        }
    }
}

inline OutcomeDistribution read_distribution(std::istream &in, const std::string &source = "<stream>") {
    std::string raw;
    std::size_t lineno = 0;
    std::size_t bits = 0;
    bool have_header = false;
    std::vector<double> probs;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) {
            continue;
        }
        if (!have_header) {
            if (first != "dist") {
                throw parse_error(source, lineno, "expected header 'dist k=<bits>'");
            }
            std::string kspec;
            if (!(ls >> kspec) || kspec.rfind("k=", 0) != 0) {
                throw parse_error(source, lineno, "expected header 'dist k=<bits>'");
            }
            try {
                bits = std::stoul(kspec.substr(2));
            } catch (const std::exception &) {
                throw parse_error(source, lineno, "malformed bit count");
            }
            if (bits == 0 || bits > kMaxDistributionBits) {
                throw parse_error(source, lineno, "bit count out of range [1, 26]");
            }
            probs.assign(std::size_t(1) << bits, 0.0);
            have_header = true;
            continue;
        }
        std::string pstr;
        if (!(ls >> pstr)) {
            throw parse_error(source, lineno, "expected '<bitstring> <probability>'");
        }
        std::string extra;
        if (ls >> extra) {
            throw parse_error(source, lineno, "trailing tokens on distribution line");
        }
        std::uint64_t index;
        try {
            BitString b = BitString::from_string(first);
            if (b.size() != bits) {
                throw std::invalid_argument("outcome length does not match header");
            }
            index = b.to_index();
        } catch (const std::exception &e) {
            throw parse_error(source, lineno, e.what());
        }
        double p;
        try {
            std::size_t used = 0;
            p = std::stod(pstr, &used);
            if (used != pstr.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw parse_error(source, lineno, "malformed probability '" + pstr + "'");
        }
        if (!(p >= 0.0) || p > 1.0 + 1e-12) {
            throw parse_error(source, lineno, "probability out of [0, 1]");
        }
        if (probs[index] != 0.0) {
            throw parse_error(source, lineno, "duplicate outcome '" + first + "'");
        }
        probs[index] = p;
    }
    if (!have_header) {
        throw parse_error(source, lineno, "missing 'dist' header");
    }
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw parse_error(source, lineno, "probabilities sum to " + std::to_string(total) + ", not 1");
    }
    return OutcomeDistribution::renormalized(bits, std::move(probs));
}

inline OutcomeDistribution load_distribution(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error(path, 0, "cannot open file");
    }
    return read_distribution(in, path);
}

inline void save_distribution(const OutcomeDistribution &dist, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw parse_error(path, 0, "cannot open file for writing");
    }
    write_distribution(out, dist);
}

}  // namespace iqpsim
