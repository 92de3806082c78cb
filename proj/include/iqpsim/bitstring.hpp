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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iqpsim {

/// Fixed-length string of 0/1 bits.
///
/// Bit 0 is the leftmost character of the text form. When a bit string
/// labels an entry of a dense table, the leftmost bit is the most
/// significant bit of the index, so lexicographic order of the strings
/// matches numeric order of the indices.
class BitString {
   public:
    explicit BitString(std::size_t length) : bits_(length, 0) {
        if (length == 0) {
            throw std::invalid_argument("bit string length must be at least 1");
        }
    }

    static BitString from_string(std::string_view text) {
        BitString out(text.size());
        for (std::size_t j = 0; j < text.size(); ++j) {
            char c = text[j];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("bit string may contain only 0 and 1: '" + std::string(text) + "'");
            }
            out.bits_[j] = static_cast<std::uint8_t>(c - '0');
        }
        return out;
    }

    static BitString from_index(std::uint64_t index, std::size_t length) {
        BitString out(length);
        if (length < 64 && (index >> length) != 0) {
            throw std::invalid_argument("index does not fit in bit string length");
        }
        for (std::size_t j = 0; j < length; ++j) {
            out.bits_[j] = static_cast<std::uint8_t>((index >> (length - 1 - j)) & 1u);
        }
        return out;
    }

    std::size_t size() const noexcept {
        return bits_.size();
    }

    bool bit(std::size_t j) const {
        return bits_.at(j) != 0;
    }

    void set_bit(std::size_t j, bool value) {
        bits_.at(j) = value ? 1 : 0;
    }

    /// Index with the leftmost bit most significant. Requires size <= 64.
    std::uint64_t to_index() const {
        if (size() > 64) {
            throw std::invalid_argument("bit string too long for a 64-bit index");
        }
        std::uint64_t v = 0;
        for (std::uint8_t b : bits_) {
            v = (v << 1) | b;
        }
        return v;
    }

    std::string str() const {
        std::string s(size(), '0');
        for (std::size_t j = 0; j < size(); ++j) {
            s[j] = bits_[j] ? '1' : '0';
        }
        return s;
    }

    bool any() const noexcept {
        for (std::uint8_t b : bits_) {
            if (b) {
                return true;
            }
        }
        return false;
    }

    std::size_t popcount() const noexcept {
        std::size_t n = 0;
        for (std::uint8_t b : bits_) {
            n += b;
        }
        return n;
    }

    friend BitString operator^(const BitString &a, const BitString &b) {
        if (a.size() != b.size()) {
            throw std::invalid_argument("bitwise xor requires equal lengths");
        }
        BitString out(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            out.bits_[j] = a.bits_[j] ^ b.bits_[j];
        }
        return out;
    }

    friend bool operator==(const BitString &a, const BitString &b) = default;

   private:
    std::vector<std::uint8_t> bits_;
};

inline bool parity64(std::uint64_t v) noexcept {
    return (std::popcount(v) & 1) != 0;
}

}  // namespace iqpsim
