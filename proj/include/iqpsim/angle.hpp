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
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace iqpsim {

/// Rotation angle canonicalized into (0, 2*pi].
///
/// Angles are either exact rational multiples of pi (kept as a reduced
/// fraction so pi/4-family circuits round-trip through text exactly) or
/// plain doubles. Multiples of 2*pi canonicalize to 2*pi itself, which is
/// inside the interval and acts as the identity rotation.
class Angle {
   public:
    static Angle radians(double value) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument("angle must be finite");
        }
        Angle a;
        a.exact_ = false;
        double two_pi = 2.0 * std::numbers::pi;
        double v = std::fmod(value, two_pi);
        if (v <= 0.0) {
            v += two_pi;
        }
        a.value_ = v;
        return a;
    }

    /// Exact angle pi * num / den.
    static Angle pi_fraction(std::int64_t num, std::int64_t den) {
        if (den == 0) {
            throw std::invalid_argument("angle denominator must be nonzero");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        // Reduce into (0, 2] pi-units: num/den mod 2, with 0 mapped to 2.
        std::int64_t m = num % (2 * den);
        if (m <= 0) {
            m += 2 * den;
        }
        std::int64_t g = std::gcd(m, den);
        Angle a;
        a.exact_ = true;
        a.num_ = m / g;
        a.den_ = den / g;
        a.value_ = std::numbers::pi * static_cast<double>(a.num_) / static_cast<double>(a.den_);
        return a;
    }

    /// Accepts "pi", "pi*<p>", "pi*<p>/<q>" or a decimal radian value.
    static Angle parse(std::string_view token) {
        if (token.empty()) {
            throw std::invalid_argument("empty angle token");
        }
        if (token == "pi") {
            return pi_fraction(1, 1);
        }
        if (token.rfind("pi*", 0) == 0) {
            std::string_view frac = token.substr(3);
            auto slash = frac.find('/');
            try {
                std::int64_t num, den = 1;
                if (slash == std::string_view::npos) {
                    num = parse_int(frac);
                } else {
                    num = parse_int(frac.substr(0, slash));
                    den = parse_int(frac.substr(slash + 1));
                }
                return pi_fraction(num, den);
            } catch (const std::invalid_argument &) {
                throw std::invalid_argument("malformed angle token '" + std::string(token) + "'");
            }
        }
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(std::string(token), &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed angle token '" + std::string(token) + "'");
        }
        if (used != token.size() || !std::isfinite(v)) {
            throw std::invalid_argument("malformed angle token '" + std::string(token) + "'");
        }
        return radians(v);
    }

    /// Canonical value in (0, 2*pi].
    double value() const noexcept {
        return value_;
    }

    bool is_exact() const noexcept {
        return exact_;
    }
    std::int64_t num() const noexcept {
        return num_;
    }
    std::int64_t den() const noexcept {
        return den_;
    }

    std::string str() const {
        if (exact_) {
            if (den_ == 1) {
                return "pi*" + std::to_string(num_);
            }
            return "pi*" + std::to_string(num_) + "/" + std::to_string(den_);
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value_);
        return buf;
    }

    friend bool operator==(const Angle &a, const Angle &b) {
        if (a.exact_ && b.exact_) {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        return a.value_ == b.value_;
    }

   private:
    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("empty integer");
        }
        std::size_t used = 0;
        long long v = std::stoll(std::string(s), &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    }

    double value_ = 0.0;
    bool exact_ = false;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace iqpsim
