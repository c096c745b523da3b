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

#include "gsv/gf2.h"

#include <algorithm>
#include <bit>

#include "gsv/errors.h"

namespace gsv {

BitVector::BitVector(size_t len) : len_(len), words_((len + 63) / 64, 0) {
}

BitVector BitVector::from_word(size_t len, uint64_t word) {
    require(len <= 64, "BitVector::from_word: len > 64");
    BitVector v(len);
    if (len > 0) {
        v.words_[0] = len == 64 ? word : (word & ((uint64_t{1} << len) - 1));
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            v.set(k, true);
        } else if (bits[k] != '0') {
            throw ParseError("bit string must be over {0,1}");
        }
    }
    return v;
}

void BitVector::set(size_t k, bool v) {
    uint64_t m = uint64_t{1} << (k & 63);
    if (v) {
        words_[k >> 6] |= m;
    } else {
        words_[k >> 6] &= ~m;
    }
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::popcount() const {
    size_t c = 0;
    for (uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

size_t BitVector::first_one() const {
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return i * 64 + std::countr_zero(words_[i]);
        }
    }
    return len_;
}

void BitVector::check_same(const BitVector &other) const {
    require(len_ == other.len_, "BitVector length mismatch");
}

bool BitVector::dot(const BitVector &other) const {
    check_same(other);
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::is_subset_of(const BitVector &other) const {
    check_same(other);
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i] & ~other.words_[i]) {
            return false;
        }
    }
    return true;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    check_same(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector r = *this;
    r &= other;
    return r;
}

BitVector BitVector::operator|(const BitVector &other) const {
    BitVector r = *this;
    r |= other;
    return r;
}

bool BitVector::operator<(const BitVector &other) const {
    if (len_ != other.len_) {
        return len_ < other.len_;
    }
    return words_ < other.words_;
}

std::string BitVector::str() const {
    std::string s(len_, '0');
    for (size_t k = 0; k < len_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

size_t BitVector::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ len_;
    for (uint64_t w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
    Gf2Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(size_t cols, std::vector<BitVector> rows) {
    Gf2Matrix m(0, cols);
    for (auto &r : rows) {
        m.append_row(std::move(r));
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string> &rows) {
    require(!rows.empty(), "Gf2Matrix::from_strings: need at least one row");
    Gf2Matrix m(0, rows[0].size());
    for (const auto &r : rows) {
        m.append_row(BitVector::from_string(r));
    }
    return m;
}

void Gf2Matrix::append_row(BitVector r) {
    require(r.len() == cols_, "Gf2Matrix: row length mismatch");
    data_.push_back(std::move(r));
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool Gf2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BitVector &r) { return r.none(); });
}

std::string Gf2Matrix::str() const {
    std::string s;
    for (const auto &r : data_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

RowBasis::RowBasis(const Gf2Matrix &m) : cols_(m.cols()) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    size_t next = 0;
    for (size_t c = 0; c < cols_ && next < rows.size(); c++) {
        size_t piv = next;
        while (piv < rows.size() && !rows[piv].get(c)) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[piv]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots_.push_back(c);
        next++;
    }
    rows.resize(next);
    basis_ = std::move(rows);
}

bool RowBasis::contains(const BitVector &w) const {
    require(w.len() == cols_, "rowspan_contains: length mismatch");
    BitVector t = w;
    for (size_t k = 0; k < basis_.size(); k++) {
        if (t.get(pivots_[k])) {
            t ^= basis_[k];
        }
    }
    return t.none();
}

size_t rank(const Gf2Matrix &m) {
    if (m.cols() <= 64) {
        std::vector<uint64_t> rows;
        rows.reserve(m.rows());
        for (size_t r = 0; r < m.rows(); r++) {
            if (uint64_t w = m.row(r).word0()) {
                rows.push_back(w);
            }
        }
        size_t rk = 0;
        while (!rows.empty()) {
            uint64_t p = rows.back();
            rows.pop_back();
            if (!p) {
                continue;
            }
            rk++;
            uint64_t lb = p & (~p + 1);
            for (auto &x : rows) {
                if (x & lb) {
                    x ^= p;
                }
            }
        }
        return rk;
    }
    return RowBasis(m).rank();
}

std::vector<BitVector> kernel_basis(const Gf2Matrix &m) {
    RowBasis rb(m);
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : rb.pivots()) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> out;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector y(n);
        y.set(f, true);
        for (size_t k = 0; k < rb.rank(); k++) {
            if (rb.basis()[k].get(f)) {
                y.set(rb.pivots()[k], true);
            }
        }
        out.push_back(std::move(y));
    }
    return out;
}

bool rowspan_contains(const Gf2Matrix &m, const BitVector &w) {
    require(w.len() == m.cols(), "rowspan_contains: length mismatch");
    return RowBasis(m).contains(w);
}

Gf2Matrix vstack(const Gf2Matrix &a, const Gf2Matrix &b) {
    require(a.cols() == b.cols(), "vstack: column mismatch");
    Gf2Matrix r = a;
    for (size_t k = 0; k < b.rows(); k++) {
        r.append_row(b.row(k));
    }
    return r;
}

Gf2Matrix matmul(const Gf2Matrix &a, const Gf2Matrix &b) {
    require(a.cols() == b.rows(), "matmul: shape mismatch");
    Gf2Matrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        BitVector acc(b.cols());
        for (size_t k = 0; k < a.cols(); k++) {
            if (a.get(i, k)) {
                acc ^= b.row(k);
            }
        }
        r.row(i) = std::move(acc);
    }
    return r;
}

}  // namespace gsv
