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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "iqpsim/bitstring.hpp"
#include "iqpsim/distribution.hpp"

namespace iqpsim {

struct GoodnessOfFitReport {
    std::size_t sample_count = 0;
    double tvd = 0.0;         // empirical table vs exact table
    double chi_square = 0.0;  // over bins with expected count >= 5, tail pooled
    std::size_t bins = 0;     // bins entering the statistic
    double degrees_of_freedom = 0.0;
    double p_value = 1.0;
    double significance = 0.01;
    bool pass = false;

    std::string key_value_block() const {
        std::ostringstream out;
        out << "samples=" << sample_count << "\n";
        out << "tvd=" << tvd << "\n";
        out << "chi_square=" << chi_square << "\n";
        out << "bins=" << bins << "\n";
        out << "dof=" << degrees_of_freedom << "\n";
        out << "p_value=" << p_value << "\n";
        out << "significance=" << significance << "\n";
        out << "pass=" << (pass ? 1 : 0) << "\n";
        return out.str();
    }
};

/// Empirical TVD plus a chi-square test of the samples against the exact
/// table. Outcomes with expected count below 5 are pooled into one tail bin
/// (standard practice; the pooled bin is kept only if its expected mass is
/// positive).
inline GoodnessOfFitReport goodness_of_fit(const std::vector<BitString> &samples, const OutcomeDistribution &exact,
                                           double significance = 0.01) {
    if (samples.empty()) {
        throw std::invalid_argument("goodness of fit needs at least one sample");
    }
    const std::size_t bits = exact.bit_count();
    const double n = static_cast<double>(samples.size());
    std::vector<double> counts(exact.size(), 0.0);
    for (const BitString &s : samples) {
        if (s.size() != bits) {
            throw std::invalid_argument("sample length does not match the exact table");
        }
        counts[s.to_index()] += 1.0;
    }

    GoodnessOfFitReport report;
    report.sample_count = samples.size();
    report.significance = significance;
    double tvd = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        tvd += std::abs(counts[i] / n - exact[i]);
    }
    report.tvd = 0.5 * tvd;

    double chi = 0.0;
    std::size_t bins = 0;
    double tail_expected = 0.0, tail_observed = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        double expected = n * exact[i];
        if (expected >= 5.0) {
            chi += (counts[i] - expected) * (counts[i] - expected) / expected;
            ++bins;
        } else {
            tail_expected += expected;
            tail_observed += counts[i];
        }
    }
    if (tail_expected > 0.0) {
        chi += (tail_observed - tail_expected) * (tail_observed - tail_expected) / tail_expected;
        ++bins;
    }
    report.chi_square = chi;
    report.bins = bins;
    if (bins <= 1) {
        // Degenerate table (effectively a point mass): pass iff nothing
        // landed outside the expected support.
        report.degrees_of_freedom = 0.0;
        report.p_value = (tail_expected == 0.0 && tail_observed > 0.0) ? 0.0 : 1.0;
        report.pass = report.p_value >= significance;
        return report;
    }
    report.degrees_of_freedom = static_cast<double>(bins - 1);
    boost::math::chi_squared chi2(report.degrees_of_freedom);
    report.p_value = boost::math::cdf(boost::math::complement(chi2, chi));
    report.pass = report.p_value >= significance;
    return report;
}

}  // namespace iqpsim
