// Copyright 2026 The gsv Authors
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

#ifndef GSV_GF2_H
#define GSV_GF2_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gsv {

/// Packed vector over Z_2. Bits past len() are kept zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t len);
    /// Low `len` bits of `word` (len <= 64).
    static BitVector from_word(size_t len, uint64_t word);
    /// Parses "1011"; character k is bit k.
    static BitVector from_string(std::string_view bits);

    size_t len() const {
        return len_;
    }
    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool v);
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    bool any() const;
    bool none() const {
        return !any();
    }
    size_t popcount() const;
    /// Index of the lowest set bit, or len() if none.
    size_t first_one() const;
    /// Parity of the AND with `other`.
    bool dot(const BitVector &other) const;
    /// True iff every set bit of *this is set in `other`.
    bool is_subset_of(const BitVector &other) const;
    /// Low 64 bits.
    uint64_t word0() const {
        return words_.empty() ? 0 : words_[0];
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    BitVector operator|(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

    std::string str() const;
    const std::vector<uint64_t> &words() const {
        return words_;
    }
    size_t hash() const;

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
    void check_same(const BitVector &other) const;
};

class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols);
    static Gf2Matrix identity(size_t n);
    static Gf2Matrix from_rows(size_t cols, std::vector<BitVector> rows);
    /// Rows given as strings of '0'/'1'.
    static Gf2Matrix from_strings(const std::vector<std::string> &rows);

    size_t rows() const {
        return data_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVector &row(size_t r) const {
        return data_[r];
    }
    BitVector &row(size_t r) {
        return data_[r];
    }
    bool get(size_t r, size_t c) const {
        return data_[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        data_[r].set(c, v);
    }
    void append_row(BitVector r);

    Gf2Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Gf2Matrix &other) const = default;
    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> data_;
};

size_t rank(const Gf2Matrix &m);

/// Basis of {y : m y = 0}, one vector per free column, in reduced echelon order.
std::vector<BitVector> kernel_basis(const Gf2Matrix &m);

bool rowspan_contains(const Gf2Matrix &m, const BitVector &w);

Gf2Matrix vstack(const Gf2Matrix &a, const Gf2Matrix &b);

Gf2Matrix matmul(const Gf2Matrix &a, const Gf2Matrix &b);

/// Reduced row basis of the row space, pivots strictly increasing.
class RowBasis {
   public:
    explicit RowBasis(const Gf2Matrix &m);
    size_t rank() const {
        return basis_.size();
    }
    bool contains(const BitVector &w) const;
    const std::vector<BitVector> &basis() const {
        return basis_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

   private:
    size_t cols_;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace gsv

template <>
struct std::hash<gsv::BitVector> {
    size_t operator()(const gsv::BitVector &v) const {
        return v.hash();
    }
};

#endif
