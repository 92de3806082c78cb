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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqpsim/bitstring.hpp"

namespace iqpsim {

/// Dense GF(2) matrix with at most 64 columns. Rows are stored as index-space
/// masks (column c at bit position cols-1-c), so applying a row to an outcome
/// index is a single AND + parity.
class BitMatrix {
   public:
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, 0) {
        if (cols == 0 || cols > 64) {
            throw std::invalid_argument("bit matrix supports 1..64 columns");
        }
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i, true);
        }
        return m;
    }

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (data_[r] >> (cols_ - 1 - c)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        check(r, c);
        std::uint64_t bit = std::uint64_t(1) << (cols_ - 1 - c);
        if (value) {
            data_[r] |= bit;
        } else {
            data_[r] &= ~bit;
        }
    }

    std::uint64_t row_mask(std::size_t r) const {
        return data_.at(r);
    }

    /// Matrix-vector product over GF(2); both sides are index-space words.
    std::uint64_t apply(std::uint64_t v) const {
        std::uint64_t out = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            out = (out << 1) | (parity64(data_[r] & v) ? 1u : 0u);
        }
        return out;
    }

    BitString apply(const BitString &v) const {
        if (v.size() != cols_) {
            throw std::invalid_argument("vector length does not match column count");
        }
        return BitString::from_index(apply(v.to_index()), rows_);
    }

    std::string row_str(std::size_t r) const {
        std::string s(cols_, '0');
        for (std::size_t c = 0; c < cols_; ++c) {
            s[c] = get(r, c) ? '1' : '0';
        }
        return s;
    }

    friend bool operator==(const BitMatrix &a, const BitMatrix &b) = default;

   private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) {
            throw std::out_of_range("bit matrix index out of range");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

}  // namespace iqpsim
